#include "tauscope/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "tauscope/verify.hpp"

namespace tauscope::cli {

using algebra::Algebra;
using algebra::AlgebraPresentation;
using algebra::AlgebraPtr;
using census::Census;
using exactlin::Scalar;
using exactlin::Vector;
using torsion::IdSet;

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

bool identChar(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'' || ch == '.';
}

std::vector<Token> tokenize(const std::string& s, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({"->", i + 1});
      i += 2;
    } else if (ch == ':' || ch == '*' || ch == '+' || ch == '-' || ch == '/') {
      out.push_back({std::string(1, ch), i + 1});
      ++i;
    } else if (identChar(ch)) {
      std::size_t j = i;
      while (j < s.size() && identChar(s[j])) ++j;
      out.push_back({s.substr(i, j - i), i + 1});
      i = j;
    } else {
      fail(line, i + 1, std::string("unexpected character '") + ch + "'");
    }
  }
  return out;
}

bool isNumber(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

struct SourceLine {
  std::size_t number;
  std::vector<Token> tokens;
};

algebra::Relation parseRelation(const AlgebraPresentation& p, const SourceLine& l) {
  const auto& tk = l.tokens;
  algebra::Relation rel;
  std::size_t i = 1;
  if (i >= tk.size()) fail(l.number, tk[0].column + tk[0].text.size(), "empty relation");
  while (i < tk.size()) {
    Scalar sign(1);
    if (tk[i].text == "+" || tk[i].text == "-") {
      if (tk[i].text == "-") sign = Scalar(-1);
      ++i;
    } else if (!rel.terms.empty()) {
      fail(l.number, tk[i].column, "expected '+' or '-' between terms");
    }
    if (i >= tk.size()) fail(l.number, tk.back().column, "dangling sign");
    Scalar coeff(1);
    if (isNumber(tk[i].text) && i + 1 < tk.size() && (tk[i + 1].text == "*" || tk[i + 1].text == "/")) {
      std::string num = tk[i].text;
      ++i;
      if (tk[i].text == "/") {
        if (i + 1 >= tk.size() || !isNumber(tk[i + 1].text)) fail(l.number, tk[i].column, "malformed coefficient");
        num += "/" + tk[i + 1].text;
        i += 2;
      }
      coeff = Scalar::parse(num);
      if (i >= tk.size() || tk[i].text != "*") fail(l.number, tk[i - 1].column, "expected '*' after coefficient");
      ++i;
    }
    std::vector<std::size_t> factors;
    while (true) {
      if (i >= tk.size() || !identChar(tk[i].text[0])) fail(l.number, i < tk.size() ? tk[i].column : tk.back().column, "expected an arrow");
      auto idx = p.quiver.arrowIndex(tk[i].text);
      if (!idx) fail(l.number, tk[i].column, "unknown arrow '" + tk[i].text + "'");
      factors.push_back(*idx);
      ++i;
      if (i < tk.size() && tk[i].text == "*") {
        ++i;
        continue;
      }
      break;
    }
    std::reverse(factors.begin(), factors.end());
    for (std::size_t k = 0; k + 1 < factors.size(); ++k)
      if (p.quiver.arrows[factors[k]].target != p.quiver.arrows[factors[k + 1]].source)
        fail(l.number, tk[1].column, "path is not composable");
    rel.terms.push_back({sign * coeff, std::move(factors)});
  }
  return rel;
}

}  // namespace

AlgebraPresentation parsePresentation(const std::string& text) {
  std::vector<SourceLine> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0, headLine = 0;
  std::string name;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (name.empty()) {
      std::istringstream words(raw);
      std::string kw, rest, extra;
      if (!(words >> kw)) continue;
      if (kw != "algebra") fail(number, raw.find(kw) + 1, "expected 'algebra <name>' header");
      if (!(words >> rest) || (words >> extra)) fail(number, raw.find(kw) + 1, "expected exactly one algebra name");
      name = rest;
      headLine = number;
      continue;
    }
    auto tk = tokenize(raw, number);
    if (!tk.empty()) lines.push_back({number, std::move(tk)});
  }
  if (name.empty()) fail(1, 1, "empty presentation");
  AlgebraPresentation p;
  p.name = name;

  const SourceLine* vertices = nullptr;
  std::vector<const SourceLine*> arrows, relations;
  for (const auto& l : lines) {
    const auto& kw = l.tokens[0].text;
    if (kw == "vertices") {
      if (vertices) fail(l.number, l.tokens[0].column, "duplicate vertices line");
      vertices = &l;
    } else if (kw == "arrow") {
      arrows.push_back(&l);
    } else if (kw == "relation") {
      relations.push_back(&l);
    } else {
      fail(l.number, l.tokens[0].column, "unknown keyword '" + kw + "'");
    }
  }
  if (!vertices) fail(headLine, 1, "missing vertices line");
  if (vertices->tokens.size() < 2) fail(vertices->number, vertices->tokens[0].column, "empty vertex list");
  for (std::size_t k = 1; k < vertices->tokens.size(); ++k) {
    const auto& t = vertices->tokens[k];
    if (!identChar(t.text[0])) fail(vertices->number, t.column, "malformed vertex id");
    if (p.quiver.vertexIndex(t.text)) fail(vertices->number, t.column, "duplicate vertex '" + t.text + "'");
    p.quiver.vertices.push_back(t.text);
  }
  for (const auto* l : arrows) {
    const auto& tk = l->tokens;
    if (tk.size() != 6 || tk[2].text != ":" || tk[4].text != "->")
      fail(l->number, tk[0].column, "expected 'arrow <name> : <src> -> <tgt>'");
    if (p.quiver.arrowIndex(tk[1].text)) fail(l->number, tk[1].column, "duplicate arrow '" + tk[1].text + "'");
    auto s = p.quiver.vertexIndex(tk[3].text);
    if (!s) fail(l->number, tk[3].column, "unknown vertex '" + tk[3].text + "'");
    auto t = p.quiver.vertexIndex(tk[5].text);
    if (!t) fail(l->number, tk[5].column, "unknown vertex '" + tk[5].text + "'");
    p.quiver.arrows.push_back({tk[1].text, *s, *t});
  }
  for (const auto* l : relations) p.relations.push_back(parseRelation(p, *l));
  return p;
}

AlgebraPresentation loadPresentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parsePresentation(ss.str());
}

std::string normalisedText(const AlgebraPresentation& p) {
  std::ostringstream os;
  const auto& q = p.quiver;
  os << "algebra " << p.name << "\nvertices";
  for (const auto& v : q.vertices) os << ' ' << v;
  os << '\n';
  for (const auto& a : q.arrows) os << "arrow " << a.name << " : " << q.vertices[a.source] << " -> " << q.vertices[a.target] << '\n';
  for (const auto& r : p.relations) {
    os << "relation";
    for (std::size_t k = 0; k < r.terms.size(); ++k) {
      const auto& t = r.terms[k];
      os << ' ' << (k ? "+ " : "") << t.coefficient.str();
      for (auto it = t.arrows.rbegin(); it != t.arrows.rend(); ++it) os << '*' << q.arrows[*it].name;
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

ordered_json matrixJson(const exactlin::Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

exactlin::Matrix matrixFromJson(const ordered_json& j, std::size_t rows, std::size_t cols) {
  exactlin::Matrix m(rows, cols);
  if (j.size() != rows) throw InvariantFailure("cached matrix has the wrong shape");
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw InvariantFailure("cached matrix has the wrong shape");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::parse(j[r][c].get<std::string>());
  }
  return m;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

}  // namespace

Census loadOrComputeCensus(const AlgebraPtr& a, const AlgebraPresentation& p, const census::Caps& caps,
                           const std::string& cacheDir) {
  if (cacheDir.empty()) return census::enumerateIndecomposables(a, caps);
  const std::string key = normalisedText(p) + "caps " + std::to_string(caps.dimCap) + " " +
                          std::to_string(caps.countCap) + "\nfield " +
                          std::to_string(exactlin::FieldMode::modulus()) + "\n";
  const auto file = std::filesystem::path(cacheDir) / ("census-" + hex(fnv1a(key)) + ".json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    const auto j = ordered_json::parse(in);
    if (j.value("key", "") == key) {
      std::vector<census::Item> items;
      for (const auto& it : j["items"]) {
        census::Item item;
        item.id = items.size();
        item.name = it["name"];
        item.dims = it["dims"].get<repmod::DimVector>();
        item.projective = it["projective"];
        item.injective = it["injective"];
        std::vector<exactlin::Matrix> action;
        const auto& peirce = a->peirceBasis();
        for (std::size_t k = 0; k < peirce.size(); ++k)
          action.push_back(matrixFromJson(it["action"][k], item.dims[peirce[k].target], item.dims[peirce[k].source]));
        item.module = repmod::Representation::fromAction(a, item.dims, std::move(action), true);
        items.push_back(std::move(item));
      }
      return Census(a, std::move(items), caps);
    }
  }
  Census c = census::enumerateIndecomposables(a, caps);
  ordered_json j;
  j["schema"] = 1;
  j["key"] = key;
  j["items"] = ordered_json::array();
  for (const auto& it : c.items()) {
    ordered_json e;
    e["name"] = it.name;
    e["dims"] = it.dims;
    e["projective"] = it.projective;
    e["injective"] = it.injective;
    e["action"] = ordered_json::array();
    for (std::size_t k = 0; k < a->peirceBasis().size(); ++k) e["action"].push_back(matrixJson(it.module.action(k)));
    j["items"].push_back(std::move(e));
  }
  std::filesystem::create_directories(cacheDir);
  std::ofstream(file) << j.dump(1) << '\n';
  return c;
}

namespace {

std::string elementString(const Algebra& a, const Vector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].isZero()) continue;
    std::string c = v[k].str();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    if (c != "1") out += c + "*";
    out += a.labels()[k];
  }
  return out.empty() ? "0" : out;
}

ordered_json names(const Census& c, const IdSet& t) {
  ordered_json out = ordered_json::array();
  for (auto x : t) out.push_back(c.item(x).name);
  return out;
}

ordered_json vertexNames(const Algebra& a, const std::vector<std::size_t>& vs) {
  ordered_json out = ordered_json::array();
  for (auto v : vs) out.push_back(a.vertexNames()[v]);
  return out;
}

}  // namespace

ordered_json algebraJson(const Algebra& a) {
  ordered_json j;
  if (const auto* p = a.presentation()) {
    j["name"] = p->name;
    j["arrows"] = ordered_json::array();
    for (const auto& ar : p->quiver.arrows)
      j["arrows"].push_back({{"name", ar.name},
                             {"source", p->quiver.vertices[ar.source]},
                             {"target", p->quiver.vertices[ar.target]}});
  }
  j["vertices"] = a.vertexNames();
  j["dimension"] = a.dimension();
  j["basis"] = a.labels();
  return j;
}

ordered_json censusJson(const Census& c) {
  ordered_json out = ordered_json::array();
  for (const auto& it : c.items())
    out.push_back({{"id", it.id},
                   {"name", it.name},
                   {"dims", it.dims},
                   {"projective", it.projective},
                   {"injective", it.injective}});
  return out;
}

ordered_json complexJson(const Census& c, const silting::TwoTermComplex& s) {
  const auto& a = *c.algebra();
  const auto& d = s.differential();
  ordered_json m = ordered_json::array();
  for (std::size_t i = 0; i < d.sources.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < d.targets.size(); ++j)
      row.push_back(elementString(a, silting::blockToElement(a, d.sources[i], d.targets[j], d.entries[i][j])));
    m.push_back(std::move(row));
  }
  return {{"p1", vertexNames(a, d.sources)},
          {"p0", vertexNames(a, d.targets)},
          {"matrix", std::move(m)},
          {"cokernelDims", s.cokernel().dims()}};
}

ordered_json classJson(const Census& c, const IdSet& t) { return names(c, t); }

namespace {

ordered_json lambdaJson(const AlgebraPtr& l) {
  if (!l) return {{"dimension", 0}, {"simples", 0}, {"multiplicities", ordered_json::array()}};
  std::vector<std::size_t> mult;
  for (const auto& s : repmod::decompose(repmod::regularModule(l))) mult.push_back(s.multiplicity);
  std::sort(mult.rbegin(), mult.rend());
  ordered_json table = ordered_json::array();
  for (std::size_t i = 0; i < l->dimension(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < l->dimension(); ++j)
      row.push_back(elementString(*l, l->multiply(l->basisVector(i), l->basisVector(j))));
    table.push_back(std::move(row));
  }
  return {{"dimension", l->dimension()},
          {"simples", mult.size()},
          {"multiplicities", mult},
          {"basis", l->labels()},
          {"products", std::move(table)}};
}

}  // namespace

ordered_json localisationJson(const Census& c, const localise::ClassRecord& r) {
  const auto& a = *c.algebra();
  ordered_json kernel = ordered_json::array();
  for (const auto& k : r.ring.kernelBasis) kernel.push_back(elementString(a, k));
  return {{"class", names(c, r.torsionClass)},
          {"wide", names(c, r.wide)},
          {"silting",
           {{"basicModule", names(c, r.silting.basicModule)},
            {"support", vertexNames(a, r.silting.supportVertices)},
            {"supportTauTilting", silting::isSupportTauTilting(r.silting)},
            {"sigmaPrime", complexJson(c, r.silting.sigmaPrime)},
            {"sigma1", complexJson(c, r.silting.sigma1)}}},
          {"lambda", lambdaJson(r.ring.lambda)},
          {"kernel", {{"dimension", r.kernelDimension}, {"basis", std::move(kernel)}}},
          {"tor1", r.tor1},
          {"selfOrthogonal", localise::selfOrthogonality(r.ring.sigmaB)},
          {"xSigma", names(c, r.xSigma)}};
}

ordered_json verifyJson(const Census& c, std::uint64_t seed, bool& ok) {
  const auto rep = verify::runInvariantSuite(c, seed);
  ok = rep.ok();
  ordered_json checks = ordered_json::array();
  for (const auto& ch : rep.checks)
    checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"failures", ch.failures}});
  return {{"ok", ok}, {"failureCount", rep.failureCount()}, {"checks", std::move(checks)}};
}

std::string hasseDot(const Census& c, const std::vector<IdSet>& classes) {
  auto subset = [](const IdSet& x, const IdSet& y) {
    return x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  std::ostringstream os;
  os << "digraph torsion {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::string label = "{";
    for (auto x : classes[i]) label += (label.size() > 1 ? "," : "") + c.item(x).name;
    os << "  t" << i << " [label=\"" << label << "}\"];\n";
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (!subset(classes[i], classes[j])) continue;
      bool cover = true;
      for (std::size_t k = 0; k < classes.size() && cover; ++k)
        cover = !(subset(classes[i], classes[k]) && subset(classes[k], classes[j]));
      if (cover) os << "  t" << i << " -> t" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

namespace {

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

ordered_json classList(const Census& c, const std::vector<IdSet>& sets) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < sets.size(); ++i) out.push_back({{"index", i}, {"members", names(c, sets[i])}});
  return out;
}

const std::set<std::string>& knownCommands() {
  static const std::set<std::string> k{"census", "tors", "wide", "silting", "localise", "verify", "hasse", "report"};
  return k;
}

}  // namespace

int runCommand(const SessionConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!knownCommands().count(cfg.command)) {
      err << "unknown command '" << cfg.command << "'\n";
      return InvariantFailed;
    }
    if (cfg.dimCap == 0 || cfg.countCap == 0 || cfg.lengthCap == 0) {
      err << "caps must be positive\n";
      return InvariantFailed;
    }
    if (cfg.prime) {
      exactlin::FieldMode::usePrime(cfg.prime);
    } else {
      exactlin::FieldMode::useRationals();
    }
    const auto p = loadPresentation(cfg.input);
    const auto a = Algebra::fromPresentation(p, cfg.lengthCap);
    const Census c = loadOrComputeCensus(a, p, {cfg.dimCap, cfg.countCap}, cfg.cacheDir);

    ordered_json j;
    j["schema"] = 1;
    j["command"] = cfg.command;
    j["algebra"] = algebraJson(*a);
    const auto& cmd = cfg.command;
    if (cmd == "census") {
      j["count"] = c.size();
      j["census"] = censusJson(c);
      emit(cfg.out, j.dump(2) + "\n", out);
      return Ok;
    }
    const auto classes = torsion::enumerateTorsionClasses(c);
    if (cmd == "hasse") {
      emit(cfg.dot.empty() ? cfg.out : cfg.dot, hasseDot(c, classes), out);
      return Ok;
    }
    if (cmd == "tors") {
      j["count"] = classes.size();
      j["torsionClasses"] = classList(c, classes);
    } else if (cmd == "wide") {
      std::vector<IdSet> wides;
      for (const auto& t : classes) wides.push_back(torsion::alpha(c, t));
      j["count"] = wides.size();
      j["wideSubcategories"] = classList(c, wides);
    } else if (cmd == "silting") {
      ordered_json list = ordered_json::array();
      for (const auto& t : classes) {
        const auto d = silting::siltingFromTorsionClass(c, t);
        list.push_back({{"class", names(c, t)},
                        {"basicModule", names(c, d.basicModule)},
                        {"support", vertexNames(*a, d.supportVertices)},
                        {"tauRigid", silting::isTauRigid(d.module)},
                        {"supportTauTilting", silting::isSupportTauTilting(d)},
                        {"tilting", silting::isTilting(d.module)},
                        {"sigmaPrime", complexJson(c, d.sigmaPrime)},
                        {"sigma1", complexJson(c, d.sigma1)}});
      }
      j["count"] = list.size();
      j["silting"] = std::move(list);
    } else if (cmd == "localise" || cmd == "report") {
      const auto rep = localise::classifyAll(c);
      if (cmd == "report") {
        j["census"] = censusJson(c);
        j["torsionClasses"] = classList(c, classes);
      }
      ordered_json list = ordered_json::array();
      for (const auto& r : rep.records) list.push_back(localisationJson(c, r));
      j["count"] = rep.records.size();
      j["localisations"] = std::move(list);
      j["counts"] = {{"torsionClasses", rep.torsionClasses},
                     {"wideSubcategories", rep.wideSubcategories},
                     {"siltingModules", rep.siltingModules},
                     {"ringEpimorphisms", rep.ringEpimorphisms},
                     {"universalLocalisations", rep.universalLocalisations}};
      if (cmd == "report") {
        bool ok = true;
        j["verify"] = verifyJson(c, cfg.seed, ok);
        if (!cfg.dot.empty()) emit(cfg.dot, hasseDot(c, classes), out);
        emit(cfg.out, j.dump(2) + "\n", out);
        return ok ? Ok : InvariantFailed;
      }
    } else if (cmd == "verify") {
      bool ok = true;
      j["verify"] = verifyJson(c, cfg.seed, ok);
      emit(cfg.out, j.dump(2) + "\n", out);
      return ok ? Ok : InvariantFailed;
    }
    emit(cfg.out, j.dump(2) + "\n", out);
    return Ok;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return ParseFailed;
  } catch (const MalformedRelation& e) {
    err << e.what() << '\n';
    return ParseFailed;
  } catch (const InvalidAlgebra& e) {
    err << e.what() << '\n';
    return ParseFailed;
  } catch (const census::RepInfiniteAtCap& e) {
    err << e.what() << " (" << e.partial().size() << " indecomposables found)\n";
    return RepInfinite;
  } catch (const NonSplitEndomorphism& e) {
    err << e.what() << '\n';
    return NonSplit;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return InvariantFailed;
  }
}

}  // namespace tauscope::cli
