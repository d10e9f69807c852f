#include <hexanimals/cli.hpp>

#include <hexanimals/enumerate.hpp>
#include <hexanimals/hexmap.hpp>
#include <hexanimals/oracle.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace hexanimals::cli {

namespace {

using nlohmann::json;

json decimal_array(const Poly& p) {
  if (p.is_zero()) return json::array({"0"});
  return to_decimal(p.coeffs());
}

struct Output {
  json query = json::object();
  std::optional<Series> series;
  std::optional<RatFn> gf;
  std::optional<std::uint64_t> count;
  std::optional<std::vector<std::string>> animals;
  std::map<std::string, std::string> conversion;

  void write(std::ostream& out, bool as_json) const {
    if (as_json) {
      json doc;
      doc["query"] = query;
      if (series) doc["series"] = to_decimal(*series);
      if (gf) doc["gf"] = {{"num", decimal_array(gf->num())}, {"den", decimal_array(gf->den())}};
      if (count) doc["count"] = std::to_string(*count);
      if (animals) doc["animals"] = *animals;
      for (const auto& [key, value] : conversion) {
        if (key != "result") doc[key] = value;
      }
      out << doc.dump(2) << '\n';
      return;
    }
    if (series) {
      for (std::size_t i = 0; i < series->size(); ++i) out << (i ? "," : "") << (*series)[i];
      out << '\n';
    }
    if (gf) out << to_string(*gf) << '\n';
    if (animals) {
      for (const auto& a : *animals) out << a << '\n';
    } else if (count) {
      out << *count << '\n';
    }
    if (conversion.contains("result")) out << conversion.at("result") << '\n';
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::map<std::string, Lattice> kLattices{{"hex", Lattice::hex}, {"square", Lattice::square}};

const auto kPositive = CLI::Range(1, 1 << 30);

std::string lattice_name(Lattice l) { return l == Lattice::hex ? "hex" : "square"; }

std::size_t vertex_index(const std::map<std::string, std::size_t>& ids, const json& id, const std::string& where) {
  const auto it = ids.find(id.dump());
  if (it == ids.end()) throw InvalidInput(where + " refers to unknown vertex " + id.dump());
  return it->second;
}

template <typename T>
T field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) throw InvalidInput(where + " lacks field '" + key + "'");
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidInput(where + " has a malformed '" + key + "'");
  }
}

}  // namespace

std::string write_cmp_file(const Cmp& c) {
  validate(c);
  json doc;
  doc["version"] = 1;
  doc["vertices"] = json::array();
  doc["edges"] = json::array();
  for (std::size_t v = 0; v < c.size(); ++v) {
    doc["vertices"].push_back({{"id", v}, {"weight", c.weights[v]}});
    for (const auto& e : c.edges[v]) doc["edges"].push_back({{"from", v}, {"to", e.target}, {"mult", e.multiplicity}});
  }
  doc["start"] = c.start;
  doc["accept"] = c.accept;
  return doc.dump(2) + "\n";
}

Cmp read_cmp_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("document must be a JSON object");
  if (field<int>(doc, "version", "document") != 1) throw InvalidInput("unsupported version");

  Cmp c;
  std::map<std::string, std::size_t> ids;
  const json vertices = field<json>(doc, "vertices", "document");
  if (!vertices.is_array()) throw InvalidInput("vertices must be an array");
  for (const auto& v : vertices) {
    const json id = field<json>(v, "id", "vertex");
    if (!id.is_number_integer() && !id.is_string()) throw InvalidInput("vertex id must be an integer or a string");
    if (!ids.emplace(id.dump(), ids.size()).second) throw InvalidInput("duplicate vertex id " + id.dump());
    const auto weight = field<std::int64_t>(v, "weight", "vertex " + id.dump());
    if (weight < 1 || weight > 1'000'000) throw InvalidInput("vertex " + id.dump() + " has weight outside 1..1000000");
    c.weights.push_back(static_cast<int>(weight));
  }

  std::vector<std::map<std::size_t, std::uint64_t>> out(c.size());
  const json edges = field<json>(doc, "edges", "document");
  if (!edges.is_array()) throw InvalidInput("edges must be an array");
  for (const auto& e : edges) {
    const std::size_t from = vertex_index(ids, field<json>(e, "from", "edge"), "edge");
    const std::size_t to = vertex_index(ids, field<json>(e, "to", "edge"), "edge");
    const json mult = field<json>(e, "mult", "edge");
    if (!mult.is_number_integer() || mult.get<std::int64_t>() < 1) throw InvalidInput("edge multiplicity must be a positive integer");
    out[from][to] += mult.get<std::uint64_t>();
  }
  for (const auto& targets : out) {
    auto& list = c.edges.emplace_back();
    for (const auto& [to, mult] : targets) list.push_back({to, mult});
  }

  auto id_list = [&](const char* key) {
    const json list = field<json>(doc, key, "document");
    if (!list.is_array()) throw InvalidInput(std::string(key) + " must be an array");
    std::vector<std::size_t> result;
    std::set<std::size_t> seen;
    for (const auto& id : list) {
      const std::size_t v = vertex_index(ids, id, key);
      if (!seen.insert(v).second) throw InvalidInput(std::string(key) + " lists vertex " + id.dump() + " twice");
      result.push_back(v);
    }
    return result;
  };
  c.start = id_list("start");
  c.accept = id_list("accept");
  return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of hexagonal and square lattice animals"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Write one JSON document instead of text");

  Output result;
  Lattice lattice = Lattice::hex;
  int height = 0;
  std::size_t terms = 0;
  bool exact = false;
  std::vector<int> bounds;
  int cells = 0;
  std::optional<int> strip_rows;
  bool list = false;
  std::string path;
  bool want_gf = false;
  std::optional<std::size_t> series_terms;
  bool hex_to_word = false;
  bool word_to_hex = false;

  auto add_lattice = [&](CLI::App* sub) {
    sub->add_option("--lattice", lattice, "hex or square")->transform(CLI::CheckedTransformer(kLattices));
  };
  auto add_height = [&](CLI::App* sub) {
    sub->add_option("--height", height, "Strip height in square rows")->required()->check(kPositive);
  };
  auto add_terms = [&](CLI::App* sub) {
    sub->add_option("--terms", terms, "Number of series terms")->required()->check(kPositive);
  };
  auto add_bounds = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--bounds", bounds, "Span bound in native cells for columns with 1, 2, ... blocks")
                    ->delimiter(',')
                    ->check(kPositive);
    if (required) opt->required();
    return opt;
  };

  auto* strip_gf_cmd = app.add_subcommand("strip-gf", "Generating function of animals in a strip");
  add_lattice(strip_gf_cmd);
  add_height(strip_gf_cmd);
  strip_gf_cmd->add_flag("--exact", exact, "Require the animal to fill the full height");

  auto* strip_series_cmd = app.add_subcommand("strip-series", "Counting series of animals in a strip");
  add_lattice(strip_series_cmd);
  add_height(strip_series_cmd);
  add_terms(strip_series_cmd);
  strip_series_cmd->add_flag("--exact", exact, "Require the animal to fill the full height");

  auto* khaya_cmd = app.add_subcommand("khaya", "Counts of all fixed hexanimals");
  add_terms(khaya_cmd);

  auto* free_gf_cmd = app.add_subcommand("free-gf", "Generating function of board-constrained animals");
  add_lattice(free_gf_cmd);
  add_bounds(free_gf_cmd, true);

  auto* free_series_cmd = app.add_subcommand("free-series", "Counting series of board-constrained animals");
  add_lattice(free_series_cmd);
  add_bounds(free_series_cmd, true);
  add_terms(free_series_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force count of animals with a fixed cell count");
  add_lattice(oracle_cmd);
  oracle_cmd->add_option("--cells", cells, "Number of cells")->required()->check(kPositive);
  auto* strip_opt = oracle_cmd->add_option("--strip-rows", strip_rows, "Strip height in square rows")
                        ->check(kPositive);
  auto* bounds_opt = add_bounds(oracle_cmd, false);
  strip_opt->excludes(bounds_opt);
  oracle_cmd->add_flag("--list", list, "Print every animal instead of the count");

  auto* cmp_cmd = app.add_subcommand("cmp", "Path generating function of a weighted digraph file");
  cmp_cmd->add_option("--file", path, "Graph document")->required();
  auto* gf_opt = cmp_cmd->add_flag("--gf", want_gf, "Solve for the generating function");
  auto* series_opt = cmp_cmd->add_option("--series", series_terms, "Number of series terms")
                         ->check(kPositive);
  gf_opt->excludes(series_opt);

  auto* convert_cmd = app.add_subcommand("convert", "Translate between hexanimals and parity polyomino words");
  auto* h2w = convert_cmd->add_flag("--hex-to-word", hex_to_word, "Input holds a hexanimal");
  auto* w2h = convert_cmd->add_flag("--word-to-hex", word_to_hex, "Input holds a word");
  h2w->excludes(w2h);
  convert_cmd->add_option("--input", path, "Input file")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv{"hexanimals"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  auto& q = result.query;
  try {
    if (strip_gf_cmd->parsed()) {
      q = {{"command", "strip-gf"}, {"lattice", lattice_name(lattice)}, {"height", height}, {"exact", exact}};
      result.gf = exact ? exact_strip_gf(height, lattice) : strip_gf(height, lattice);
    } else if (strip_series_cmd->parsed()) {
      q = {{"command", "strip-series"}, {"lattice", lattice_name(lattice)}, {"height", height},
           {"terms", terms},           {"exact", exact}};
      result.series = exact ? exact_strip_series(height, terms, lattice) : strip_series(height, terms, lattice);
    } else if (khaya_cmd->parsed()) {
      q = {{"command", "khaya"}, {"terms", terms}};
      result.series = khaya(terms);
    } else if (free_gf_cmd->parsed()) {
      q = {{"command", "free-gf"}, {"lattice", lattice_name(lattice)}, {"bounds", bounds}};
      result.gf = free_gf(BoardBounds{bounds}, lattice);
    } else if (free_series_cmd->parsed()) {
      q = {{"command", "free-series"}, {"lattice", lattice_name(lattice)}, {"bounds", bounds}, {"terms", terms}};
      result.series = free_series(BoardBounds{bounds}, terms, lattice);
    } else if (oracle_cmd->parsed()) {
      q = {{"command", "oracle"}, {"lattice", lattice_name(lattice)}, {"cells", cells}, {"list", list}};
      Constraint c{lattice, strip_rows, std::nullopt};
      if (strip_rows) q["strip_rows"] = *strip_rows;
      if (!bounds.empty()) {
        c.board = BoardBounds{bounds};
        q["bounds"] = bounds;
      }
      if (list) {
        std::vector<std::string> texts;
        for (const auto& a : oracle_enumerate(cells, c)) texts.push_back(to_string(a));
        result.count = texts.size();
        result.animals = std::move(texts);
      } else {
        result.count = oracle_count(cells, c);
      }
    } else if (cmp_cmd->parsed()) {
      if (want_gf == series_terms.has_value()) {
        err << "cmp needs exactly one of --gf and --series\n";
        return kUsage;
      }
      const Cmp c = read_cmp_file(read_file(path));
      q = {{"command", "cmp"}, {"file", path}};
      if (series_terms) {
        q["series"] = *series_terms;
        result.series = cmp_series(c, *series_terms);
      } else {
        q["gf"] = true;
        result.gf = cmp_gf(c);
      }
    } else if (convert_cmd->parsed()) {
      if (!hex_to_word && !word_to_hex) {
        err << "convert needs --hex-to-word or --word-to-hex\n";
        return kUsage;
      }
      q = {{"command", "convert"}, {"direction", hex_to_word ? "hex-to-word" : "word-to-hex"}, {"input", path}};
      const std::string text = read_file(path);
      try {
        HexAnimal h;
        CellSet cells_set;
        Word w;
        if (hex_to_word) {
          h = parse_hex_animal(text);
          cells_set = hex_to_parity(h);
          w = encode_word(cells_set);
        } else {
          w = parse_word(text);
          cells_set = decode_word(w);
          h = parity_to_hex(cells_set);
        }
        result.conversion = {{"hexanimal", to_string(h)}, {"cells", to_string(cells_set)}, {"word", to_string(w)}};
        result.conversion["result"] = hex_to_word ? to_string(w) : to_string(h);
      } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
      }
    }
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const OutOfEnvelope& e) {
    err << "out of envelope: " << e.what() << '\n';
    return kOutOfEnvelope;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  result.write(out, as_json);
  return kSuccess;
}

}  // namespace hexanimals::cli
