#include "sck/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "sck/error.hpp"

namespace sck {

namespace {

[[noreturn]] void bad_doc(const std::string& what) {
  fail("ParseError", what);
}

const Json& need(const Json& doc, const char* key) {
  if (!doc.contains(key)) bad_doc(std::string("missing key '") + key + "'");
  return doc.at(key);
}

}  // namespace

PosetPtr poset_from_json(const Json& doc) {
  std::vector<std::string> labels;
  for (const auto& e : need(doc, "elements")) labels.push_back(e.get<std::string>());
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers"))
    for (const auto& c : doc.at("covers")) {
      if (!c.is_array() || c.size() != 2) bad_doc("covers must be pairs");
      covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    }
  return std::make_shared<FinitePoset>(
      FinitePoset::from_covers(std::move(labels), covers));
}

Json poset_to_json(const FinitePoset& poset) {
  Json doc;
  doc["elements"] = poset.labels();
  Json covers = Json::array();
  for (auto [a, b] : poset.cover_pairs())
    covers.push_back(Json::array({poset.label(a), poset.label(b)}));
  doc["covers"] = std::move(covers);
  return doc;
}

Frame frame_from_json(const Json& doc) {
  const std::string tier = need(doc, "tier").get<std::string>();
  if (tier == "finite") {
    PosetPtr base = poset_from_json(need(doc, "poset"));
    return Frame::tier1(FiniteLattice::downsets_of(
        base, FiniteLattice::kDefaultDownsetLimit));
  }
  if (tier == "builtin") {
    const std::string name = need(doc, "name").get<std::string>();
    if (name == "gamma_dint") return Frame::gamma_dint();
    return Frame::builtin(name);
  }
  bad_doc("tier must be 'finite' or 'builtin'");
}

Json frame_to_json(const Frame& frame) {
  Json doc;
  if (frame.is_tier1()) {
    doc["tier"] = "finite";
    const auto& l = frame.lattice();
    if (l.mask_form()) {
      doc["poset"] = poset_to_json(*l.base());
    } else {
      Json ids = Json::array();
      for (std::size_t i = 0; i < l.size(); ++i) ids.push_back(l.id(i));
      doc["elements"] = std::move(ids);
    }
    doc["size"] = l.size();
  } else {
    doc["tier"] = "builtin";
    doc["name"] = frame.name();
  }
  return doc;
}

SpaceDescriptor space_from_json(const Json& doc) {
  const std::string tier = need(doc, "tier").get<std::string>();
  if (tier == "finite")
    return SpaceDescriptor::finite(poset_from_json(need(doc, "poset")));
  return SpaceDescriptor::builtin(need(doc, "name").get<std::string>());
}

Json space_to_json(const SpaceDescriptor& space) {
  Json doc;
  doc["view"] = "space";
  if (space.is_tier1()) {
    doc["tier"] = "finite";
    doc["poset"] = poset_to_json(*space.points());
  } else {
    doc["tier"] = "builtin";
    doc["name"] = space.name();
  }
  return doc;
}

IdealoidDoc idealoid_from_json(const Json& doc, bool apply_closure) {
  IdealoidDoc out;
  const Json& pd = need(doc, "poset");
  const Json& pairs = need(doc, "pairs");
  if (pd.is_string()) {
    out.tier1 = false;
    out.frame = Frame::builtin(pd.get<std::string>());
    if (!pairs.is_string())
      bad_doc("built-in idealoids use a named relation for 'pairs'");
    out.relation = pairs.get<std::string>();
    if (out.relation != "le" && out.relation != "way-below" &&
        out.relation != "rather-below")
      bad_doc("unknown relation '" + out.relation + "'");
    return out;
  }
  PosetPtr poset = poset_from_json(pd);
  std::vector<std::pair<std::size_t, std::size_t>> ps;
  if (pairs.is_string()) {
    const std::string rel = pairs.get<std::string>();
    if (rel != "le" && rel != "strict")
      bad_doc("unknown relation '" + rel + "'");
    for (std::size_t a = 0; a < poset->size(); ++a)
      for (std::size_t b = 0; b < poset->size(); ++b) {
        if (!poset->le(a, b)) continue;
        if (rel == "le" || a != b) ps.emplace_back(a, b);
      }
  } else {
    for (const auto& p : pairs) {
      if (!p.is_array() || p.size() != 2) bad_doc("pairs must be 2-arrays");
      ps.emplace_back(poset->index_of(p.at(0).get<std::string>()),
                      poset->index_of(p.at(1).get<std::string>()));
    }
  }
  out.tier1 = true;
  out.idealoid = Idealoid::from_pairs(std::move(poset), ps, apply_closure);
  return out;
}

Json idealoid_to_json(const Idealoid& idealoid) {
  Json doc;
  doc["poset"] = poset_to_json(*idealoid.poset());
  Json pairs = Json::array();
  for (auto [a, b] : idealoid.pairs())
    pairs.push_back(Json::array(
        {idealoid.poset()->label(a), idealoid.poset()->label(b)}));
  doc["pairs"] = std::move(pairs);
  return doc;
}

SetPresheaf set_presheaf_from_json(const Json& doc) {
  SpaceDescriptor space = space_from_json(need(doc, "space"));
  if (!space.is_tier1())
    fail("TierUnsupported", "set presheaves live on Tier-1 spaces");
  const auto& l = space.frame().lattice();
  std::vector<std::vector<std::string>> values(l.size());
  for (const auto& [id, elems] : need(doc, "values").items()) {
    const std::size_t open = l.index_of_id(id);
    for (const auto& e : elems) values[open].push_back(e.get<std::string>());
  }
  auto elem_index = [&](std::size_t open, const std::string& name) {
    auto it =
        std::find(values[open].begin(), values[open].end(), name);
    if (it == values[open].end())
      bad_doc("unknown section '" + name + "' at open '" + l.id(open) + "'");
    return static_cast<std::size_t>(it - values[open].begin());
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> res;
  if (doc.contains("restrictions"))
    for (const auto& [key, table] : doc.at("restrictions").items()) {
      auto gt = key.find('>');
      if (gt == std::string::npos) bad_doc("restriction keys look like 'U>V'");
      const std::size_t u = l.index_of_id(key.substr(0, gt));
      const std::size_t v = l.index_of_id(key.substr(gt + 1));
      std::vector<std::size_t> tab(values[u].size());
      for (const auto& [from, to] : table.items())
        tab[elem_index(u, from)] = elem_index(v, to.get<std::string>());
      res[{u, v}] = std::move(tab);
    }
  // restrictions into the empty open (and any other singleton target) can be
  // omitted; fill the forced ones
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = 0; v < l.size(); ++v) {
      if (u == v || !l.le(v, u) || res.count({u, v})) continue;
      if (values[v].size() == 1)
        res[{u, v}] = std::vector<std::size_t>(values[u].size(), 0);
    }
  return SetPresheaf::make(std::move(space), std::move(values),
                           std::move(res));
}

JumpPresheaf jump_presheaf_from_json(const Json& doc) {
  std::vector<Rat> thresholds;
  for (const auto& t : need(doc, "thresholds"))
    thresholds.push_back(parse_rat(t.get<std::string>()));
  std::vector<std::vector<std::string>> values;
  for (const auto& set : need(doc, "values")) {
    std::vector<std::string> v;
    for (const auto& e : set) v.push_back(e.get<std::string>());
    values.push_back(std::move(v));
  }
  std::vector<std::vector<std::size_t>> maps;
  if (doc.contains("maps"))
    for (std::size_t j = 0; j + 1 < values.size(); ++j) {
      const auto& table = doc.at("maps").at(j);
      std::vector<std::size_t> tab(values[j].size());
      for (const auto& [from, to] : table.items()) {
        auto src = std::find(values[j].begin(), values[j].end(), from);
        auto dst = std::find(values[j + 1].begin(), values[j + 1].end(),
                             to.get<std::string>());
        if (src == values[j].end() || dst == values[j + 1].end())
          bad_doc("jump map mentions unknown sections");
        tab[src - values[j].begin()] = dst - values[j + 1].begin();
      }
      maps.push_back(std::move(tab));
    }
  return JumpPresheaf::make(std::move(thresholds), std::move(values),
                            std::move(maps));
}

GammaJumpPresheaf gamma_presheaf_from_json(const Json& doc) {
  if (doc.contains("pullback_of"))
    return GammaJumpPresheaf::pullback(
        jump_presheaf_from_json(doc.at("pullback_of")));
  auto strings = [](const Json& arr) {
    std::vector<std::string> out;
    for (const auto& e : arr) out.push_back(e.get<std::string>());
    return out;
  };
  auto string_lists = [&](const Json& arr) {
    std::vector<std::vector<std::string>> out;
    for (const auto& e : arr) out.push_back(strings(e));
    return out;
  };
  auto table = [](const Json& obj, const std::vector<std::string>& src,
                  const std::vector<std::string>& dst) {
    std::vector<std::size_t> out(src.size(), 0);
    for (const auto& [from, to] : obj.items()) {
      auto s = std::find(src.begin(), src.end(), from);
      auto d = std::find(dst.begin(), dst.end(), to.get<std::string>());
      if (s == src.end() || d == dst.end())
        bad_doc("gamma map mentions unknown sections");
      out[s - src.begin()] = d - dst.begin();
    }
    return out;
  };
  std::vector<Rat> thresholds;
  for (const auto& t : need(doc, "thresholds"))
    thresholds.push_back(parse_rat(t.get<std::string>()));
  auto all_value = strings(need(doc, "all"));
  auto regions = string_lists(need(doc, "regions"));
  auto closed_at = string_lists(need(doc, "closed_at"));
  auto open_at = string_lists(need(doc, "open_at"));
  if (regions.empty()) bad_doc("need at least one region");
  auto all_map = table(need(doc, "all_map"), all_value, regions[0]);
  std::vector<std::vector<std::size_t>> map_in, map_mid, map_out;
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    map_in.push_back(table(need(doc, "map_in").at(i), regions[i], closed_at[i]));
    map_mid.push_back(
        table(need(doc, "map_mid").at(i), closed_at[i], open_at[i]));
    map_out.push_back(
        table(need(doc, "map_out").at(i), open_at[i], regions[i + 1]));
  }
  return GammaJumpPresheaf::make(std::move(thresholds), std::move(all_value),
                                 std::move(all_map), std::move(regions),
                                 std::move(closed_at), std::move(open_at),
                                 std::move(map_in), std::move(map_mid),
                                 std::move(map_out));
}

KSatAssignment ksat_assignment_from_json(const Json& doc) {
  KSatAssignment out;
  for (const auto& t : need(doc, "thresholds"))
    out.thresholds.push_back(parse_rat(t.get<std::string>()));
  for (const auto& set : need(doc, "values")) {
    std::vector<std::string> v;
    for (const auto& e : set) v.push_back(e.get<std::string>());
    out.values.push_back(std::move(v));
  }
  for (std::size_t j = 0; j + 1 < out.values.size(); ++j) {
    std::vector<std::size_t> tab(out.values[j].size(), 0);
    if (doc.contains("maps")) {
      const auto& table = doc.at("maps").at(j);
      for (const auto& [from, to] : table.items()) {
        auto s = std::find(out.values[j].begin(), out.values[j].end(), from);
        auto d = std::find(out.values[j + 1].begin(), out.values[j + 1].end(),
                           to.get<std::string>());
        if (s == out.values[j].end() || d == out.values[j + 1].end())
          bad_doc("assignment map mentions unknown sections");
        tab[s - out.values[j].begin()] = d - out.values[j + 1].begin();
      }
    }
    out.maps.push_back(std::move(tab));
  }
  return out;
}

RationalComplex complex_from_json(const Json& doc) {
  std::map<int, std::size_t> dims;
  for (const auto& [deg, n] : need(doc, "degrees").items())
    dims[std::stoi(deg)] = n.get<std::size_t>();
  std::map<int, Matrix> diffs;
  if (doc.contains("differentials"))
    for (const auto& [deg, rows] : doc.at("differentials").items()) {
      Matrix m;
      for (const auto& row : rows) {
        std::vector<Rat> r;
        for (const auto& x : row) r.push_back(parse_rat(x.get<std::string>()));
        m.push_back(std::move(r));
      }
      diffs[std::stoi(deg)] = std::move(m);
    }
  return RationalComplex::from_parts(std::move(dims), std::move(diffs));
}

Json complex_to_json(const RationalComplex& complex) {
  Json doc;
  Json degrees = Json::object();
  for (int d = complex.min_degree(); d <= complex.max_degree(); ++d)
    if (complex.dim(d)) degrees[std::to_string(d)] = complex.dim(d);
  doc["degrees"] = std::move(degrees);
  Json diffs = Json::object();
  for (int d = complex.min_degree(); d < complex.max_degree(); ++d) {
    const Matrix& m = complex.differential(d);
    if (matrix_is_zero(m)) continue;
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(rat_str(x));
      rows.push_back(std::move(r));
    }
    diffs[std::to_string(d)] = std::move(rows);
  }
  doc["differentials"] = std::move(diffs);
  return doc;
}

ComplexSheaf complex_sheaf_from_json(const Json& doc) {
  SpaceDescriptor space = space_from_json(need(doc, "space"));
  const auto& l = space.frame().lattice();
  std::vector<RationalComplex> values(l.size());
  for (const auto& [id, cdoc] : need(doc, "complexes").items())
    values[l.index_of_id(id)] = complex_from_json(cdoc);
  std::map<std::pair<std::size_t, std::size_t>, std::map<int, Matrix>> res;
  if (doc.contains("maps"))
    for (const auto& [key, tables] : doc.at("maps").items()) {
      auto gt = key.find('>');
      if (gt == std::string::npos) bad_doc("map keys look like 'U>V'");
      const std::size_t u = l.index_of_id(key.substr(0, gt));
      const std::size_t v = l.index_of_id(key.substr(gt + 1));
      std::map<int, Matrix> by_degree;
      for (const auto& [deg, rows] : tables.items()) {
        Matrix m;
        for (const auto& row : rows) {
          std::vector<Rat> r;
          for (const auto& x : row)
            r.push_back(parse_rat(x.get<std::string>()));
          m.push_back(std::move(r));
        }
        by_degree[std::stoi(deg)] = std::move(m);
      }
      res[{u, v}] = std::move(by_degree);
    }
  // maps into or out of zero complexes can be omitted
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = 0; v < l.size(); ++v) {
      if (u == v || !l.le(v, u) || res.count({u, v})) continue;
      if (values[v].total_dim() == 0 || values[u].total_dim() == 0)
        res[{u, v}] = {};
    }
  return ComplexSheaf::make(std::move(space), std::move(values),
                            std::move(res));
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string poset_to_dot(const FinitePoset& poset, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.size(); ++i)
    out << "  " << dot_quote(poset.label(i)) << ";\n";
  for (auto [a, b] : poset.cover_pairs())
    out << "  " << dot_quote(poset.label(a)) << " -> "
        << dot_quote(poset.label(b)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string lattice_to_dot(const FiniteLattice& lattice,
                           const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  auto label = [&](std::size_t i) {
    return lattice.id(i).empty() ? std::string("{}") : lattice.id(i);
  };
  for (std::size_t i = 0; i < lattice.size(); ++i)
    out << "  " << dot_quote(label(i)) << ";\n";
  for (std::size_t a = 0; a < lattice.size(); ++a)
    for (std::size_t b = 0; b < lattice.size(); ++b) {
      if (a == b || !lattice.le(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < lattice.size() && cover; ++c)
        if (c != a && c != b && lattice.le(a, c) && lattice.le(c, b))
          cover = false;
      if (cover)
        out << "  " << dot_quote(label(a)) << " -> " << dot_quote(label(b))
            << ";\n";
    }
  out << "}\n";
  return out.str();
}

Json homology_to_json(const std::map<int, std::size_t>& homology) {
  Json out = Json::object();
  for (const auto& [deg, dim] : homology) out[std::to_string(deg)] = dim;
  return out;
}

}  // namespace sck
