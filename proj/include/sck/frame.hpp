#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sck/idealoid.hpp"
#include "sck/lattice.hpp"
#include "sck/poset.hpp"
#include "sck/rational.hpp"

namespace sck {

/// Frames come in two tiers. Tier-1 is an exhaustively enumerable finite
/// distributive lattice. Tier-2 is one of the named symbolic built-ins, each
/// shipping closed-form decision procedures; finite lattices make the
/// way-below relation degenerate, so the interesting relations need these
/// infinite, finitely described carriers.
enum class FrameKind { Finite, Dint, DintOp, Cofinite, GammaDint };

/// Element of a frame in normal form.
///   Finite:    T1 index into the lattice
///   dint:      bot | top | up:q     with q in Q∩[0,1)   (the open (q,1])
///   dint_op:   bot | top | down:r   with r in Q∩(0,1]   (the open [0,r))
///   cofinite:  bot | cof:F          with F finite, cof:{} being top
///   γ(dint):   cut-bot | cut-all | open:r | closed:r    (ideals of dint)
struct FrameElem {
  enum class Tag { T1, Bot, Top, Up, Down, Cof, CutBottom, CutAll, OpenCut, ClosedCut };
  Tag tag = Tag::Bot;
  std::size_t index = 0;        // T1
  Rat q;                        // Up / Down / OpenCut / ClosedCut
  std::vector<long long> fin;   // Cof: the finite complement, sorted

  static FrameElem t1(std::size_t i) { return {Tag::T1, i, Rat(), {}}; }
  static FrameElem bot() { return {Tag::Bot, 0, Rat(), {}}; }
  static FrameElem top() { return {Tag::Top, 0, Rat(), {}}; }
  static FrameElem up(Rat v) { return {Tag::Up, 0, std::move(v), {}}; }
  static FrameElem down(Rat v) { return {Tag::Down, 0, std::move(v), {}}; }
  static FrameElem cof(std::vector<long long> f);
  static FrameElem cut_bottom() { return {Tag::CutBottom, 0, Rat(), {}}; }
  static FrameElem cut_all() { return {Tag::CutAll, 0, Rat(), {}}; }
  static FrameElem open_cut(Rat v) { return {Tag::OpenCut, 0, std::move(v), {}}; }
  static FrameElem closed_cut(Rat v) { return {Tag::ClosedCut, 0, std::move(v), {}}; }

  bool operator==(const FrameElem& o) const {
    return tag == o.tag && index == o.index && q == o.q && fin == o.fin;
  }
};

struct StablyContinuousReport {
  bool ok = false;
  std::string mode;         // "finite-degenerate" | "closed-form"
  std::string certificate;  // why, or the counterexample
};

class Frame {
 public:
  /// Tier-1; the lattice must be distributive (NotDistributive).
  static Frame tier1(FiniteLattice lattice);
  /// "dint" | "dint_op" | "cofinite".
  static Frame builtin(const std::string& name);
  /// The classified-ideal frame of dint (output of the Flachsmeyer
  /// construction on dint).
  static Frame gamma_dint();

  FrameKind kind() const { return kind_; }
  bool is_tier1() const { return kind_ == FrameKind::Finite; }
  std::string name() const;
  const FiniteLattice& lattice() const;

  FrameElem bottom() const;
  FrameElem top() const;

  /// "bot", "top", "up:1/2", "down:3/4", "cof:1,2,5", "cof:", "open:1/2",
  /// "closed:1/2", or a Tier-1 element id.
  FrameElem parse_elem(const std::string& text) const;
  std::string elem_str(const FrameElem& x) const;
  void validate(const FrameElem& x) const;

  bool le(const FrameElem& a, const FrameElem& b) const;
  FrameElem join(const FrameElem& a, const FrameElem& b) const;
  FrameElem meet(const FrameElem& a, const FrameElem& b) const;

  /// Way-below. Tier-1 quantifies over the (principal) ideals of the
  /// lattice, which degenerates to <=; Tier-2 uses the built-in closed form.
  bool way_below(const FrameElem& a, const FrameElem& b) const;

  /// Some(r) with a ∧ r = ⊥ and b ∨ r = ⊤, least such witness, else None.
  std::optional<FrameElem> rather_below(const FrameElem& a,
                                        const FrameElem& b) const;

  StablyContinuousReport stably_continuous() const;
  bool is_regular() const;
  bool top_is_compact() const { return way_below(top(), top()); }

  /// Sample of elements used when a Tier-2 statement is checked on a
  /// denominator-bounded basis grid (includes bot/top).
  std::vector<FrameElem> basis_sample(unsigned max_denominator) const;

 private:
  Frame() = default;
  FrameKind kind_ = FrameKind::Finite;
  std::optional<FiniteLattice> lattice_;
};

/// Frame homomorphism. Three shapes: a table between Tier-1 frames, a table
/// from a Tier-1 frame into a Tier-2 frame, or a registered named Tier-2
/// endomorphism (dint: "id", "square", "halve", "step:<r>").
class FrameHom {
 public:
  static FrameHom tier1_table(Frame source, Frame target,
                              std::vector<std::size_t> table);
  static FrameHom t1_to_t2(Frame source, Frame target,
                           std::vector<FrameElem> table);
  static FrameHom registered(const std::string& name);  // dint -> dint

  const Frame& source() const { return source_; }
  const Frame& target() const { return target_; }
  const std::string& name() const { return name_; }
  FrameElem apply(const FrameElem& x) const;

  static std::vector<std::string> registered_names();

 private:
  FrameHom() = default;
  Frame source_ = Frame::builtin("dint");
  Frame target_ = Frame::builtin("dint");
  std::vector<std::size_t> table_;
  std::vector<FrameElem> elem_table_;
  std::string name_;  // registered homs
};

/// x ≪ y implies h(x) ≪ h(y); exhaustive on Tier-1 pairs, basis-sampled on
/// Tier-2 (denominators up to 16).
bool preserves_way_below(const FrameHom& hom);

}  // namespace sck
