#include "ncalg/format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/symbols.hpp"

namespace ncalg {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

/// Locates a string value in the raw document for error positions; the
/// first occurrence at or after `from`.
class Locator {
 public:
  explicit Locator(const std::string& text) : text_(text) {}
  std::size_t find(const std::string& value) {
    std::string quoted = json(value).dump();
    std::size_t at = text_.find(quoted, cursor_);
    if (at == std::string::npos) at = text_.find(quoted);
    if (at == std::string::npos) return std::string::npos;
    cursor_ = at + quoted.size();
    return at + 1;
  }

 private:
  const std::string& text_;
  std::size_t cursor_ = 0;
};

[[noreturn]] void fail_at(const std::string& origin, const std::string& text, std::size_t offset, const std::string& what) {
  auto [line, col] = line_column(text, offset);
  throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what, offset, line, col);
}

template <class F>
auto with_position(const std::string& origin, const std::string& text, Locator& loc, const std::string& field,
                   const std::string& value, F&& f) {
  std::size_t at = loc.find(value);
  try {
    return f();
  } catch (const ParseError& e) {
    if (at == std::string::npos) throw ParseError(origin + ": " + field + ": " + e.what(), e.position());
    fail_at(origin, text, at + e.position(), field + ": " + e.what());
  }
}

MatrixData read_matrix(const json& j) {
  MatrixData m;
  m.entries = j.at("entries").get<std::vector<std::vector<std::string>>>();
  m.row_shifts = j.at("row_shifts").get<std::vector<int>>();
  m.col_shifts = j.at("col_shifts").get<std::vector<int>>();
  return m;
}

}  // namespace

PresentationFile parse_presentation_file(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
    std::string msg = e.what();
    fail_at(origin, text, off, msg.substr(msg.find(':') + 2));
  }
  Locator loc(text);
  try {
    if (!doc.is_object()) throw InputError("document must be an object");
    if (doc.value("format", 0) != 1) throw InputError("unsupported or missing format (expected 1)");
    std::vector<Generator> gens;
    for (auto& g : doc.at("generators")) {
      auto bd = g.at("bidegree").get<std::vector<int>>();
      if (bd.size() != 2 || bd[0] < 0 || bd[1] < 0 || bd[0] + bd[1] == 0)
        throw InputError("generator " + g.at("name").get<std::string>() + " needs a nonzero bidegree [i, j]");
      gens.push_back({g.at("name").get<std::string>(), {bd[0], bd[1]}});
    }
    std::vector<std::string> params = doc.value("parameters", std::vector<std::string>{});
    std::vector<std::pair<std::string, std::string>> constraints;
    for (auto& c : doc.value("algebraic_constraints", json::array())) {
      std::string sym = c.at("symbol").get<std::string>();
      constraints.push_back({sym, c.at("minimal_polynomial").get<std::string>()});
      if (std::find(params.begin(), params.end(), sym) == params.end()) params.push_back(sym);
    }
    Alphabet al(gens);
    PresentationFile out;
    Presentation& p = out.presentation;
    p = with_position(origin, text, loc, "algebraic_constraints", constraints.empty() ? "" : constraints[0].second,
                      [&] { return make_presentation(doc.value("name", "file"), al, {}, params, constraints, {}); });
    for (auto& nv : doc.value("nonvanishing", std::vector<std::string>{}))
      p.nonvanishing.push_back(with_position(origin, text, loc, "nonvanishing", nv, [&] { return parse_poly(nv, p.scope()); }));
    std::size_t ri = 0;
    for (auto& rel : doc.at("relations")) {
      std::vector<NcPoly::Term> terms;
      std::size_t ti = 0;
      for (auto& t : rel) {
        std::string field = "relations[" + std::to_string(ri) + "][" + std::to_string(ti) + "]";
        std::string coeff = t.at("coefficient").get<std::string>();
        Scalar c = with_position(origin, text, loc, field + ".coefficient", coeff,
                                 [&] { return parse_scalar(coeff, p.scope()); });
        std::vector<std::string> names = t.at("word").get<std::vector<std::string>>();
        terms.emplace_back(al.word_from_names(names), c);
        ++ti;
      }
      p.relations.push_back(NcPoly::from_terms(std::move(terms)));
      ++ri;
    }
    if (doc.contains("labels")) p.labels = doc.at("labels").get<std::vector<std::string>>();
    p.validate();
    if (doc.contains("matrices")) {
      auto& m = doc.at("matrices");
      if (m.contains("d3")) out.d3 = read_matrix(m.at("d3"));
      if (m.contains("d2")) out.d2 = read_matrix(m.at("d2"));
    }
    for (auto& c : doc.value("claims", json::array()))
      out.claims.push_back({c.at("tag").get<std::string>(), c.at("map").get<std::vector<std::string>>()});
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(origin + ": schema error: " + e.what());
  } catch (const InputError& e) {
    throw InputError(origin + ": " + e.what());
  }
}

PresentationFile read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation_file(ss.str(), path);
}

std::string write_presentation(const Presentation& pres) {
  ordered_json doc;
  doc["format"] = 1;
  doc["name"] = pres.name;
  ordered_json gens = ordered_json::array();
  for (auto& g : pres.alphabet.generators())
    gens.push_back({{"name", g.name}, {"bidegree", {g.bidegree.first, g.bidegree.second}}});
  doc["generators"] = gens;
  doc["parameters"] = pres.parameters;
  ordered_json cons = ordered_json::array();
  for (auto& c : pres.constraints)
    cons.push_back({{"symbol", symbol_name(c.symbol)}, {"minimal_polynomial", c.minimal_polynomial.to_string()}});
  doc["algebraic_constraints"] = cons;
  std::vector<std::string> nv;
  for (auto& p : pres.nonvanishing) nv.push_back(p.to_string());
  doc["nonvanishing"] = nv;
  ordered_json rels = ordered_json::array();
  for (auto& r : pres.relations) {
    ordered_json terms = ordered_json::array();
    for (auto& [w, c] : r.terms()) terms.push_back({{"coefficient", c.to_string()}, {"word", pres.alphabet.names(w)}});
    rels.push_back(terms);
  }
  doc["relations"] = rels;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < pres.relations.size(); ++i) labels.push_back(pres.label(i));
  doc["labels"] = labels;
  return doc.dump(1) + "\n";
}

}  // namespace ncalg
