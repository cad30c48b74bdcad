// egpkit command-line front end. Documents are JSON (see README); results go
// to standard output as JSON or text.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "egpkit/errors.hpp"
#include "egpkit/io.hpp"
#include "egpkit/limits.hpp"
#include "egpkit/oracle.hpp"

using namespace egp;

namespace {

enum class Format { Auto, Json, Text };

struct Options {
  Format format = Format::Auto;
  int max_n = -1;
};

Options opts;

bool want_json(bool default_json = false) {
  if (opts.format == Format::Auto) return default_json;
  return opts.format == Format::Json;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SubmodFn load_fn(const std::string& path) {
  Document d = parse_document_text(read_input(path));
  auto* z = std::get_if<SubmodFn>(&d);
  if (!z) throw ValidationError(path + ": expected a submodfn document");
  require_within(z->size(), limits().max_n, "ground size");
  return *z;
}

Preorder load_preorder(const std::string& path) {
  Document d = parse_document_text(read_input(path));
  auto* p = std::get_if<Preorder>(&d);
  if (!p) throw ValidationError(path + ": expected a preorder document");
  require_within(p->size(), limits().max_n, "ground size");
  return *p;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

// "a<b,c<b": each x<y adds x ≤ y; chains like "a<b<c" are allowed.
Preorder parse_relations(const GroundSet& g, const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& chain : split(text, ',')) {
    auto items = split(chain, '<');
    for (std::size_t i = 0; i + 1 < items.size(); ++i) pairs.emplace_back(items[i], items[i + 1]);
  }
  return Preorder::from_relations(g, pairs);
}

Mask parse_subset(const GroundSet& g, const std::string& text) { return g.mask_of(split(text, ',')); }

void emit(const Json& j, const std::string& text, bool default_json = false) {
  if (want_json(default_json)) std::cout << j.dump(2) << '\n';
  else std::cout << text << '\n';
}

template <class T>
void emit_doc(const T& x, const std::string& text, bool default_json = false) {
  emit(to_json(x), text, default_json);
}

void emit_preorders(const std::vector<Preorder>& ps) {
  Json arr = Json::array();
  std::string text;
  for (const auto& p : ps) {
    arr.push_back(to_json(p));
    text += (text.empty() ? "" : "\n") + p.format();
  }
  emit(arr, text);
}

Json partition_json(const GroundSet& g, const Partition& blocks) {
  Json arr = Json::array();
  for (Mask b : blocks) arr.push_back(g.labels_of(b));
  return arr;
}

std::string partition_text(const GroundSet& g, const Partition& blocks) {
  std::string s;
  for (Mask b : blocks) s += (s.empty() ? "" : " ") + g.format(b);
  return s;
}

void cmd_check(const std::string& in) {
  SubmodFn z = load_fn(in);
  bool sub = is_submodular(z);
  Json j{{"submodular", sub}, {"finite", z.is_finite()}};
  std::ostringstream t;
  t << "submodular: " << (sub ? "yes" : "no") << "\nfinite: " << (z.is_finite() ? "yes" : "no");
  if (sub) {
    Decomposition d = decompose(z);
    j["modular"] = is_modular(z);
    j["blocks"] = partition_json(z.ground(), d.blocks);
    j["pre"] = to_json(pre_of(z));
    t << "\nmodular: " << (is_modular(z) ? "yes" : "no") << "\nblocks: " << partition_text(z.ground(), d.blocks)
      << "\npre: " << pre_of(z).format();
  }
  emit(j, t.str());
}

void cmd_gen(const std::string& family, const std::string& params) {
  auto letters_of = [](const std::string& n) { return letters(std::stoi(n)); };
  SubmodFn z;
  if (family == "permutahedron") {
    std::vector<Rational> levels;
    for (const auto& x : split(params, ',')) levels.push_back(parse_rational(x));
    z = permutahedron(levels);
  } else if (family == "preorder-cone") {
    auto [kind, arg] = [&] {
      auto c = params.find(':');
      if (c == std::string::npos) throw ValidationError("preorder-cone expects KIND:N or N:RELATIONS");
      return std::pair(params.substr(0, c), params.substr(c + 1));
    }();
    Preorder p;
    if (kind == "chain") {
      GroundSet g = letters_of(arg);
      std::vector<Mask> levels;
      for (int i = 0; i < g.size(); ++i) levels.push_back(Mask{1} << i);
      p = Preorder::total(g, levels);
    } else if (kind == "discrete") p = Preorder::discrete(letters_of(arg));
    else if (kind == "coarse") p = Preorder::coarse(letters_of(arg));
    else p = parse_relations(letters_of(kind), arg);
    z = preorder_cone(p);
  } else if (family == "uniform") {
    auto rn = split(params, ',');
    if (rn.size() != 2) throw ValidationError("uniform expects R,N");
    z = matroid_rank(uniform_matroid(std::stoi(rn[0]), std::stoi(rn[1])));
  } else if (family == "graphic") {
    auto c = params.find(':');
    if (c == std::string::npos) throw ValidationError("graphic expects V:u-v,...");
    std::vector<std::tuple<std::string, int, int>> edges;
    int k = 0;
    for (const auto& e : split(params.substr(c + 1), ',')) {
      auto uv = split(e, '-');
      if (uv.size() != 2) throw ValidationError("bad edge '" + e + "'");
      edges.emplace_back(std::string("e") + char('a' + k++), std::stoi(uv[0]), std::stoi(uv[1]));
    }
    z = matroid_rank(graphic_matroid(std::stoi(params.substr(0, c)), edges));
  } else if (family == "minkowski") {
    // N:abc=1,ab=2
    auto c = params.find(':');
    if (c == std::string::npos) throw ValidationError("minkowski expects N:SET=W,...");
    GroundSet g = letters_of(params.substr(0, c));
    std::map<Mask, Rational> w;
    for (const auto& item : split(params.substr(c + 1), ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw ValidationError("bad weight '" + item + "'");
      std::vector<std::string> ls;
      for (char ch : item.substr(0, eq)) ls.emplace_back(1, ch);
      w[g.mask_of(ls)] += parse_rational(item.substr(eq + 1));
    }
    z = minkowski(g, w);
  } else if (family == "nestohedron") {
    auto c = params.find(':');
    if (c == std::string::npos) throw ValidationError("nestohedron expects path:N, cycle:N, star:N or complete:N");
    std::string shape = params.substr(0, c);
    GroundSet g = letters_of(params.substr(c + 1));
    int n = g.size();
    std::vector<std::pair<int, int>> edges;
    if (shape == "path" || shape == "cycle")
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (shape == "cycle" && n > 2) edges.emplace_back(n - 1, 0);
    if (shape == "star")
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    if (shape == "complete")
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    if (shape != "path" && shape != "cycle" && shape != "star" && shape != "complete")
      throw ValidationError("unknown graph shape '" + shape + "'");
    z = nestohedron(graph_building_set(g, edges));
  } else if (family == "corpus") {
    bool found = false;
    for (auto& e : example_corpus())
      if (e.name == params) z = e.z, found = true;
    if (!found) throw ValidationError("no corpus entry '" + params + "'");
  } else {
    throw ValidationError("unknown family '" + family + "'");
  }
  emit_doc(z, to_text(z), true);
}

struct Check {
  std::string name;
  bool ok;
};

void cmd_oracle(int max_size) {
  std::vector<Check> rows;
  for (const auto& [name, z] : example_corpus()) {
    if (z.size() > max_size) continue;
    rows.push_back({name + " submodular", is_submodular(z) == oracle::submodular(z)});
    if (z.is_finite()) rows.push_back({name + " blocks", decompose(z).blocks == oracle::finest_blocks(z)});
    std::vector<Preorder> brute;
    for (const auto& p : oracle::all_preorders(z.ground()))
      if (oracle::conforming(p, z)) brute.push_back(p);
    rows.push_back({name + " faces", conforming_preorders(z) == brute});
    bool counts = true;
    for (const auto& p : min_conforming_preorders(z)) {
      RationalPoly e = ehr_star(p);
      for (long k = 0; k <= 5; ++k) counts = counts && e(k) == oracle::count_maps(p, k, true);
    }
    rows.push_back({name + " ehr*", counts});
    if (z.is_finite()) {
      RationalPoly c = chi(z);
      bool agree = true;
      for (int n = 0; n <= 4; ++n) agree = agree && chi_character(z, n) == c(n);
      rows.push_back({name + " chi", agree});
    }
  }
  bool all = true;
  Json arr = Json::array();
  std::string text;
  for (const auto& r : rows) {
    all = all && r.ok;
    arr.push_back({{"check", r.name}, {"pass", r.ok}});
    text += std::string(r.ok ? "PASS " : "FAIL ") + r.name + "\n";
  }
  text += all ? "all checks passed" : "some checks FAILED";
  emit(arr, text);
  if (!all) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"egpkit: exact computations with extended submodular functions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "auto";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"auto", "json", "text"}));
  app.add_option("--max-n", opts.max_n, "Soft cap on ground-set size (hard cap 20)");

  std::string input = "-";
  auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "Document path, or - for stdin"); };

  auto* check = app.add_subcommand("check", "Submodularity, modularity, decomposition and pre(z)");
  add_input(check);
  auto* pre = app.add_subcommand("pre", "The preorder pre(z)");
  add_input(pre);
  auto* faces = app.add_subcommand("faces", "Face lattice via conforming preorders");
  add_input(faces);
  auto* minf = app.add_subcommand("min-faces", "Minimal conforming preorders");
  add_input(minf);

  std::string preorder_path, relations;
  auto* clos = app.add_subcommand("closure", "Closure of a compatible preorder");
  add_input(clos);
  clos->add_option("--preorder", preorder_path, "Preorder document");
  auto* clos_rel = clos->add_option("--relations", relations, "Relations such as a<b,c<b");

  std::string split_text, left_path, right_path, left_rel, right_rel;
  auto* glue_cmd = app.add_subcommand("glue", "Glue conforming preorders of z|_S and z_/S");
  add_input(glue_cmd);
  glue_cmd->add_option("--split", split_text, "Labels of S, comma separated")->required();
  glue_cmd->add_option("--left", left_path, "Preorder document on S");
  glue_cmd->add_option("--right", right_path, "Preorder document on the complement");
  auto* left_opt = glue_cmd->add_option("--left-relations", left_rel, "Relations on S");
  auto* right_opt = glue_cmd->add_option("--right-relations", right_rel, "Relations on the complement");

  auto* chi_cmd = app.add_subcommand("chi", "The polynomial invariant chi(z)");
  add_input(chi_cmd);
  bool interior = false;
  auto* ehr_cmd = app.add_subcommand("ehrhart", "Ehrhart polynomial of a preorder's order polytope");
  add_input(ehr_cmd);
  ehr_cmd->add_flag("--interior", interior, "Interior-point polynomial Ehr*");

  auto* cop = app.add_subcommand("coproduct", "z|_S (x) z_/S");
  add_input(cop);
  cop->add_option("--split", split_text, "Labels of S, comma separated")->required();
  auto* delta = app.add_subcommand("delta", "Internal coproduct over Pre(z)");
  add_input(delta);
  auto* phi_cmd = app.add_subcommand("phi", "Sum of cone functions over minimal faces");
  add_input(phi_cmd);

  std::string ground_text;
  std::vector<std::string> members;
  auto* bf = app.add_subcommand("bforests", "B-forests of a building set");
  bf->add_option("--ground", ground_text, "Labels, comma separated")->required();
  bf->add_option("--member", members, "A member of the building set (repeatable)");

  std::string family, params;
  auto* gen = app.add_subcommand("gen", "Generate a submodular function");
  gen->add_option("family", family, "permutahedron | preorder-cone | uniform | graphic | minkowski | nestohedron | corpus")
      ->required();
  gen->add_option("params", params, "Family parameters")->required();

  int oracle_size = 3;
  auto* orc = app.add_subcommand("oracle", "Brute-force cross-checks on the example corpus");
  orc->add_option("--max-size", oracle_size, "Largest ground set checked");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    opts.format = format == "json" ? Format::Json : format == "text" ? Format::Text : Format::Auto;
    if (const char* env = std::getenv("EGPKIT_MAX_N"); env && opts.max_n < 0) {
      try {
        opts.max_n = std::stoi(env);
      } catch (const std::exception&) {
        throw ValidationError("EGPKIT_MAX_N is not an integer");
      }
    }
    if (opts.max_n >= 0) {
      require_within(opts.max_n, kHardMaxGround, "--max-n");
      limits().max_n = opts.max_n;
      limits().max_all_preorders = std::max(limits().max_all_preorders, std::min(opts.max_n, 8));
      limits().max_total_preorders = std::max(limits().max_total_preorders, std::min(opts.max_n, 10));
    }

    if (*check) cmd_check(input);
    else if (*pre) {
      Preorder p = pre_of(load_fn(input));
      emit_doc(p, p.format());
    } else if (*faces) {
      FaceLattice l = enumerate_faces(load_fn(input));
      emit_doc(l, to_text(l));
    } else if (*minf) {
      emit_preorders(min_conforming_preorders(load_fn(input)));
    } else if (*clos) {
      SubmodFn z = load_fn(input);
      if (preorder_path.empty() == (clos_rel->count() == 0))
        throw ValidationError("closure needs exactly one of --preorder and --relations");
      Preorder p = preorder_path.empty() ? parse_relations(z.ground(), relations) : load_preorder(preorder_path);
      Preorder c = closure(z, p);
      emit_doc(c, c.format());
    } else if (*glue_cmd) {
      SubmodFn z = load_fn(input);
      Mask s = parse_subset(z.ground(), split_text);
      auto side = [&](const std::string& path, const std::string& rel, const CLI::Option* opt, Mask part) {
        if (path.empty() == (opt->count() == 0))
          throw ValidationError("glue needs a document or relations for each side");
        return path.empty() ? parse_relations(z.ground().subset(part), rel) : load_preorder(path);
      };
      Preorder p = glue(z, s, side(left_path, left_rel, left_opt, s),
                        side(right_path, right_rel, right_opt, z.full() & ~s));
      emit_doc(p, p.format());
    } else if (*chi_cmd) {
      RationalPoly c = chi(load_fn(input));
      emit_doc(c, to_text(c));
    } else if (*ehr_cmd) {
      Preorder p = load_preorder(input);
      RationalPoly e = interior ? ehr_star(p) : ehr(p);
      emit_doc(e, to_text(e));
    } else if (*cop) {
      SubmodFn z = load_fn(input);
      FormalSum s = coproduct_delta(z, parse_subset(z.ground(), split_text));
      emit_doc(s, s.format());
    } else if (*delta) {
      FormalSum s = internal_delta(load_fn(input));
      emit_doc(s, s.format());
    } else if (*phi_cmd) {
      FormalSum s = phi(load_fn(input));
      emit_doc(s, s.format());
    } else if (*bf) {
      GroundSet g(split(ground_text, ','));
      std::vector<Mask> gens;
      for (const auto& m : members) gens.push_back(parse_subset(g, m));
      emit_preorders(b_forests(building_closure(g, gens)));
    } else if (*gen) {
      cmd_gen(family, params);
    } else if (*orc) {
      cmd_oracle(oracle_size);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
