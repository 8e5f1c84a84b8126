#include "sck/frame.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sck/error.hpp"

namespace sck {

FrameElem FrameElem::cof(std::vector<long long> f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  FrameElem e;
  e.tag = Tag::Cof;
  e.fin = std::move(f);
  return e;
}

Frame Frame::tier1(FiniteLattice lattice) {
  if (!is_distributive(lattice))
    fail("NotDistributive", "Tier-1 frames must be distributive lattices");
  Frame f;
  f.kind_ = FrameKind::Finite;
  f.lattice_ = std::move(lattice);
  return f;
}

Frame Frame::builtin(const std::string& name) {
  Frame f;
  if (name == "dint")
    f.kind_ = FrameKind::Dint;
  else if (name == "dint_op")
    f.kind_ = FrameKind::DintOp;
  else if (name == "cofinite")
    f.kind_ = FrameKind::Cofinite;
  else
    fail("ParseError", "unknown builtin frame '" + name + "'");
  return f;
}

Frame Frame::gamma_dint() {
  Frame f;
  f.kind_ = FrameKind::GammaDint;
  return f;
}

std::string Frame::name() const {
  switch (kind_) {
    case FrameKind::Finite:
      return "finite";
    case FrameKind::Dint:
      return "dint";
    case FrameKind::DintOp:
      return "dint_op";
    case FrameKind::Cofinite:
      return "cofinite";
    case FrameKind::GammaDint:
      return "gamma_dint";
  }
  return "?";
}

const FiniteLattice& Frame::lattice() const {
  if (!lattice_) fail("TierUnsupported", "not a Tier-1 frame");
  return *lattice_;
}

FrameElem Frame::bottom() const {
  switch (kind_) {
    case FrameKind::Finite:
      return FrameElem::t1(lattice_->bottom());
    case FrameKind::GammaDint:
      return FrameElem::cut_bottom();
    default:
      return FrameElem::bot();
  }
}

FrameElem Frame::top() const {
  switch (kind_) {
    case FrameKind::Finite:
      return FrameElem::t1(lattice_->top());
    case FrameKind::Cofinite:
      return FrameElem::cof({});
    case FrameKind::GammaDint:
      return FrameElem::cut_all();
    default:
      return FrameElem::top();
  }
}

void Frame::validate(const FrameElem& x) const {
  using Tag = FrameElem::Tag;
  auto bad = [&]() {
    fail("UnknownElement", "element does not belong to frame '" + name() + "'");
  };
  switch (kind_) {
    case FrameKind::Finite:
      if (x.tag != Tag::T1 || x.index >= lattice_->size()) bad();
      return;
    case FrameKind::Dint:
      if (x.tag == Tag::Up) {
        if (x.q < 0 || x.q >= 1) fail("OutOfRange", "up:q needs q in [0,1)");
        return;
      }
      if (x.tag != Tag::Bot && x.tag != Tag::Top) bad();
      return;
    case FrameKind::DintOp:
      if (x.tag == Tag::Down) {
        if (x.q <= 0 || x.q > 1) fail("OutOfRange", "down:r needs r in (0,1]");
        return;
      }
      if (x.tag != Tag::Bot && x.tag != Tag::Top) bad();
      return;
    case FrameKind::Cofinite:
      if (x.tag != Tag::Bot && x.tag != Tag::Cof) bad();
      return;
    case FrameKind::GammaDint:
      if (x.tag == Tag::OpenCut || x.tag == Tag::ClosedCut) {
        if (x.q < 0 || x.q >= 1)
          fail("OutOfRange", "cut parameter needs q in [0,1)");
        return;
      }
      if (x.tag != Tag::CutBottom && x.tag != Tag::CutAll) bad();
      return;
  }
}

FrameElem Frame::parse_elem(const std::string& text) const {
  using Tag = FrameElem::Tag;
  auto with_prefix = [&](const std::string& p) -> std::optional<std::string> {
    if (text.rfind(p, 0) == 0) return text.substr(p.size());
    return std::nullopt;
  };
  FrameElem e;
  if (kind_ == FrameKind::Finite) {
    return FrameElem::t1(lattice_->index_of_id(text));
  }
  if (text == "bot") {
    e = bottom();
    return e;
  }
  if (text == "top") {
    e = top();
    return e;
  }
  if (auto rest = with_prefix("up:")) {
    e = FrameElem::up(parse_rat(*rest));
  } else if (auto rest2 = with_prefix("down:")) {
    e = FrameElem::down(parse_rat(*rest2));
  } else if (auto rest3 = with_prefix("cof:")) {
    std::vector<long long> f;
    std::stringstream ss(*rest3);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) f.push_back(std::stoll(part));
    e = FrameElem::cof(std::move(f));
  } else if (auto rest4 = with_prefix("open:")) {
    e = FrameElem::open_cut(parse_rat(*rest4));
  } else if (auto rest5 = with_prefix("closed:")) {
    e = FrameElem::closed_cut(parse_rat(*rest5));
  } else {
    fail("ParseError", "cannot parse frame element '" + text + "'");
  }
  validate(e);
  return e;
}

std::string Frame::elem_str(const FrameElem& x) const {
  using Tag = FrameElem::Tag;
  switch (x.tag) {
    case Tag::T1:
      return lattice_->id(x.index);
    case Tag::Bot:
    case Tag::CutBottom:
      return "bot";
    case Tag::Top:
    case Tag::CutAll:
      return "top";
    case Tag::Up:
      return "up:" + rat_str(x.q);
    case Tag::Down:
      return "down:" + rat_str(x.q);
    case Tag::OpenCut:
      return "open:" + rat_str(x.q);
    case Tag::ClosedCut:
      return "closed:" + rat_str(x.q);
    case Tag::Cof: {
      std::string out = "cof:";
      for (std::size_t i = 0; i < x.fin.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(x.fin[i]);
      }
      return out;
    }
  }
  return "?";
}

namespace {

using Tag = FrameElem::Tag;

bool cof_subset(const std::vector<long long>& a,
                const std::vector<long long>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<long long> cof_union(const std::vector<long long>& a,
                                 const std::vector<long long>& b) {
  std::vector<long long> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<long long> cof_intersection(const std::vector<long long>& a,
                                        const std::vector<long long>& b) {
  std::vector<long long> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

bool Frame::le(const FrameElem& a, const FrameElem& b) const {
  validate(a);
  validate(b);
  switch (kind_) {
    case FrameKind::Finite:
      return lattice_->le(a.index, b.index);
    case FrameKind::Dint:
      if (a.tag == Tag::Bot || b.tag == Tag::Top) return true;
      if (a.tag == Tag::Top) return false;
      if (b.tag == Tag::Bot) return false;
      return a.q >= b.q;
    case FrameKind::DintOp:
      if (a.tag == Tag::Bot || b.tag == Tag::Top) return true;
      if (a.tag == Tag::Top) return false;
      if (b.tag == Tag::Bot) return false;
      return a.q <= b.q;
    case FrameKind::Cofinite:
      if (a.tag == Tag::Bot) return true;
      if (b.tag == Tag::Bot) return false;
      return cof_subset(b.fin, a.fin);
    case FrameKind::GammaDint:
      if (a.tag == Tag::CutBottom || b.tag == Tag::CutAll) return true;
      if (a.tag == Tag::CutAll) return false;
      if (b.tag == Tag::CutBottom) return false;
      if (a.q > b.q) return true;
      if (a.q < b.q) return false;
      // Same parameter: ClosedCut(r) ⊋ OpenCut(r).
      return a.tag == Tag::OpenCut || b.tag == Tag::ClosedCut;
  }
  return false;
}

FrameElem Frame::join(const FrameElem& a, const FrameElem& b) const {
  validate(a);
  validate(b);
  if (kind_ == FrameKind::Finite)
    return FrameElem::t1(lattice_->join(a.index, b.index));
  if (kind_ == FrameKind::Cofinite) {
    if (a.tag == Tag::Bot) return b;
    if (b.tag == Tag::Bot) return a;
    return FrameElem::cof(cof_intersection(a.fin, b.fin));
  }
  // The remaining built-ins are chains.
  return le(a, b) ? b : a;
}

FrameElem Frame::meet(const FrameElem& a, const FrameElem& b) const {
  validate(a);
  validate(b);
  if (kind_ == FrameKind::Finite)
    return FrameElem::t1(lattice_->meet(a.index, b.index));
  if (kind_ == FrameKind::Cofinite) {
    if (a.tag == Tag::Bot || b.tag == Tag::Bot) return FrameElem::bot();
    return FrameElem::cof(cof_union(a.fin, b.fin));
  }
  return le(a, b) ? a : b;
}

bool Frame::way_below(const FrameElem& a, const FrameElem& b) const {
  if (!le(a, b)) return false;
  switch (kind_) {
    case FrameKind::Finite: {
      // Quantifies over the ideals of the lattice; on a finite lattice every
      // ideal is principal, so z runs over the carrier.
      const auto& l = *lattice_;
      for (std::size_t z = 0; z < l.size(); ++z)
        if (l.le(b.index, z) && !l.le(a.index, z)) return false;
      return true;
    }
    case FrameKind::Dint:
      if (a.tag == Tag::Bot || b.tag == Tag::Top) return true;
      return a.q > b.q;  // strict descent of the cut parameter
    case FrameKind::DintOp:
      if (a.tag == Tag::Bot || b.tag == Tag::Top) return true;
      return a.q < b.q;
    case FrameKind::Cofinite:
      return true;  // every directed family attains its join
    case FrameKind::GammaDint:
      if (a.tag == Tag::CutBottom || b.tag == Tag::CutAll) return true;
      if (a.tag == Tag::CutAll) return false;
      if (b.tag == Tag::ClosedCut) return true;  // principal, hence compact
      return a.q > b.q;
  }
  return false;
}

std::optional<FrameElem> Frame::rather_below(const FrameElem& a,
                                             const FrameElem& b) const {
  validate(a);
  validate(b);
  if (kind_ == FrameKind::Finite) {
    const auto& l = *lattice_;
    for (std::size_t r = 0; r < l.size(); ++r)
      if (l.meet(a.index, r) == l.bottom() && l.join(b.index, r) == l.top())
        return FrameElem::t1(r);
    return std::nullopt;
  }
  // Built-ins: the meet of two elements above bottom never collapses to
  // bottom, so only the extreme witnesses can work.
  if (a == bottom()) return top();
  if (b == top()) return bottom();
  return std::nullopt;
}

StablyContinuousReport Frame::stably_continuous() const {
  StablyContinuousReport rep;
  switch (kind_) {
    case FrameKind::Finite: {
      const auto& l = *lattice_;
      rep.mode = "finite-degenerate";
      for (std::size_t x = 0; x < l.size(); ++x) {
        std::size_t acc = l.bottom();
        for (std::size_t y = 0; y < l.size(); ++y)
          if (way_below(FrameElem::t1(y), FrameElem::t1(x)))
            acc = l.join(acc, y);
        if (acc != x) {
          rep.ok = false;
          rep.certificate = "approximation fails at " + l.id(x);
          return rep;
        }
        if (!way_below(FrameElem::t1(x), top())) {
          rep.ok = false;
          rep.certificate = "top fails to be compact over " + l.id(x);
          return rep;
        }
      }
      if (l.size() <= 512) {
        for (std::size_t x = 0; x < l.size(); ++x)
          for (std::size_t y1 = 0; y1 < l.size(); ++y1)
            for (std::size_t y2 = 0; y2 < l.size(); ++y2)
              if (way_below(FrameElem::t1(x), FrameElem::t1(y1)) &&
                  way_below(FrameElem::t1(x), FrameElem::t1(y2)) &&
                  !way_below(FrameElem::t1(x),
                             FrameElem::t1(l.meet(y1, y2)))) {
                rep.ok = false;
                rep.certificate = "meet stability fails at " + l.id(x);
                return rep;
              }
      }
      rep.ok = true;
      rep.certificate = "way-below coincides with <= on a finite lattice";
      return rep;
    }
    case FrameKind::Dint:
      return {true, "closed-form", "dense interpolation q > c > q'"};
    case FrameKind::DintOp:
      return {true, "closed-form", "dense interpolation r < c < r'"};
    case FrameKind::Cofinite:
      return {true, "closed-form",
              "algebraic: way-below coincides with <=, every directed family "
              "of cofinite opens attains its join"};
    case FrameKind::GammaDint:
      return {true, "closed-form",
              "spectral: principal cuts are compact and approximate"};
  }
  return rep;
}

bool Frame::is_regular() const {
  switch (kind_) {
    case FrameKind::Finite: {
      const auto& l = *lattice_;
      for (std::size_t x = 0; x < l.size(); ++x) {
        std::size_t acc = l.bottom();
        for (std::size_t y = 0; y < l.size(); ++y)
          if (rather_below(FrameElem::t1(y), FrameElem::t1(x)))
            acc = l.join(acc, y);
        if (acc != x) return false;
      }
      return true;
    }
    default:
      // Chains of length > 2 and the cofinite frame: a nontrivial element is
      // approximated from rather-below only by bottom.
      return false;
  }
}

std::vector<FrameElem> Frame::basis_sample(unsigned max_denominator) const {
  std::vector<FrameElem> out;
  switch (kind_) {
    case FrameKind::Finite:
      for (std::size_t i = 0; i < lattice_->size(); ++i)
        out.push_back(FrameElem::t1(i));
      return out;
    case FrameKind::Dint:
    case FrameKind::DintOp:
    case FrameKind::GammaDint: {
      out.push_back(bottom());
      std::set<Rat> grid;
      for (unsigned den = 1; den <= max_denominator; ++den)
        for (unsigned num = 0; num <= den; ++num) grid.insert(Rat(num, den));
      for (const Rat& q : grid) {
        if (kind_ == FrameKind::Dint && q < 1) out.push_back(FrameElem::up(q));
        if (kind_ == FrameKind::DintOp && q > 0)
          out.push_back(FrameElem::down(q));
        if (kind_ == FrameKind::GammaDint && q < 1) {
          out.push_back(FrameElem::open_cut(q));
          out.push_back(FrameElem::closed_cut(q));
        }
      }
      out.push_back(top());
      return out;
    }
    case FrameKind::Cofinite: {
      out.push_back(bottom());
      for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<long long> f;
        for (unsigned b = 0; b < 4; ++b)
          if ((mask >> b) & 1u) f.push_back(b);
        out.push_back(FrameElem::cof(std::move(f)));
      }
      return out;
    }
  }
  return out;
}

FrameHom FrameHom::tier1_table(Frame source, Frame target,
                               std::vector<std::size_t> table) {
  const auto& ls = source.lattice();
  const auto& lt = target.lattice();
  if (table.size() != ls.size()) fail("ParseError", "hom table is not total");
  for (std::size_t i : table)
    if (i >= lt.size()) fail("UnknownElement", "hom table index out of range");
  if (table[ls.bottom()] != lt.bottom() || table[ls.top()] != lt.top())
    fail("NotAFrameHom", "bottom or top not preserved");
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = 0; b < ls.size(); ++b) {
      if (table[ls.join(a, b)] != lt.join(table[a], table[b]))
        fail("NotAFrameHom", "binary join not preserved");
      if (table[ls.meet(a, b)] != lt.meet(table[a], table[b]))
        fail("NotAFrameHom", "binary meet not preserved");
    }
  FrameHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.table_ = std::move(table);
  return h;
}

FrameHom FrameHom::t1_to_t2(Frame source, Frame target,
                            std::vector<FrameElem> table) {
  const auto& ls = source.lattice();
  if (table.size() != ls.size()) fail("ParseError", "hom table is not total");
  for (const auto& e : table) target.validate(e);
  if (!(table[ls.bottom()] == target.bottom()) ||
      !(table[ls.top()] == target.top()))
    fail("NotAFrameHom", "bottom or top not preserved");
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = 0; b < ls.size(); ++b) {
      if (!(table[ls.join(a, b)] == target.join(table[a], table[b])))
        fail("NotAFrameHom", "binary join not preserved");
      if (!(table[ls.meet(a, b)] == target.meet(table[a], table[b])))
        fail("NotAFrameHom", "binary meet not preserved");
    }
  FrameHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.elem_table_ = std::move(table);
  return h;
}

std::vector<std::string> FrameHom::registered_names() {
  return {"id", "square", "halve", "step:1/2"};
}

FrameHom FrameHom::registered(const std::string& name) {
  bool known = name == "id" || name == "square" || name == "halve" ||
               name.rfind("step:", 0) == 0;
  if (!known) fail("ParseError", "unknown registered hom '" + name + "'");
  if (name.rfind("step:", 0) == 0) {
    Rat c = parse_rat(name.substr(5));
    if (c < 0 || c >= 1) fail("OutOfRange", "step parameter needs [0,1)");
  }
  FrameHom h;
  h.source_ = Frame::builtin("dint");
  h.target_ = Frame::builtin("dint");
  h.name_ = name;
  return h;
}

FrameElem FrameHom::apply(const FrameElem& x) const {
  if (!name_.empty()) {
    if (x.tag == FrameElem::Tag::Bot || x.tag == FrameElem::Tag::Top) return x;
    Rat q = x.q;
    if (name_ == "id") return FrameElem::up(q);
    if (name_ == "square") return FrameElem::up(q * q);
    if (name_ == "halve") return FrameElem::up(q / 2);
    return FrameElem::up(parse_rat(name_.substr(5)));  // step:<c>
  }
  if (!elem_table_.empty()) return elem_table_[x.index];
  return FrameElem::t1(table_[x.index]);
}

bool preserves_way_below(const FrameHom& hom) {
  const unsigned kMaxDen = 16;
  auto sample = hom.source().basis_sample(kMaxDen);
  for (const auto& a : sample)
    for (const auto& b : sample)
      if (hom.source().way_below(a, b) &&
          !hom.target().way_below(hom.apply(a), hom.apply(b)))
        return false;
  return true;
}

}  // namespace sck
