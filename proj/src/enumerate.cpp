#include "sck/enumerate.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

#include "sck/error.hpp"

namespace sck {

std::vector<std::vector<std::uint64_t>> all_labeled_posets(std::size_t n) {
  if (n > 7) fail("SizeLimitExceeded", "poset enumeration capped at 7");
  std::vector<std::vector<std::uint64_t>> current;
  current.push_back({});  // the empty poset
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& rows : current) {
      // rows[a] bit b set iff a <= b among 0..k-1
      const std::uint64_t all = k == 0 ? 0 : (1ull << k) - 1;
      for (std::uint64_t lo = 0;; lo = (lo - all) & all) {
        // lo = candidates strictly below the new element; must be a downset.
        bool lo_ok = true;
        for (std::size_t b = 0; b < k && lo_ok; ++b)
          if ((lo >> b) & 1u) {
            for (std::size_t a = 0; a < k; ++a)
              if (((rows[a] >> b) & 1u) && !((lo >> a) & 1u)) {
                lo_ok = false;
                break;
              }
          }
        if (lo_ok) {
          const std::uint64_t hi_pool = all & ~lo;
          for (std::uint64_t hi = 0;; hi = (hi - hi_pool) & hi_pool) {
            bool ok = true;
            // hi must be an upset, and everything in lo must already be
            // below everything in hi (closure adds nothing new).
            for (std::size_t a = 0; a < k && ok; ++a) {
              if (!((hi >> a) & 1u)) continue;
              for (std::size_t b = 0; b < k; ++b)
                if (((rows[a] >> b) & 1u) && a != b && !((hi >> b) & 1u)) {
                  ok = false;
                  break;
                }
            }
            for (std::size_t a = 0; a < k && ok; ++a)
              if ((lo >> a) & 1u)
                if ((hi & ~rows[a]) != 0) ok = false;
            if (ok) {
              auto ext = rows;
              for (std::size_t a = 0; a < k; ++a)
                if ((lo >> a) & 1u) ext[a] |= 1ull << k;
              ext.push_back((1ull << k) | hi);
              next.push_back(std::move(ext));
            }
            if (hi == hi_pool) break;
          }
        }
        if (lo == all) break;
      }
    }
    current = std::move(next);
  }
  return current;
}

namespace {

std::string canonical_key(const std::vector<std::uint64_t>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::string best;
  do {
    std::string key(n * n, '0');
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if ((rows[perm[a]] >> perm[b]) & 1u) key[a * n + b] = '1';
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FinitePoset> posets_up_to_iso(std::size_t n) {
  std::vector<FinitePoset> out;
  std::unordered_set<std::string> seen;
  for (const auto& rows : all_labeled_posets(n)) {
    if (!seen.insert(canonical_key(rows)).second) continue;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    auto r = rows;
    out.push_back(FinitePoset::from_le_rows(std::move(labels), std::move(r)));
  }
  return out;
}

std::vector<std::uint64_t> enumerate_ideals(const FinitePoset& poset) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : enumerate_downsets(poset, 1u << 20)) {
    if (d == 0) continue;
    bool directed = true;
    for (std::size_t a = 0; a < poset.size() && directed; ++a) {
      if (!((d >> a) & 1u)) continue;
      for (std::size_t b = 0; b < poset.size(); ++b) {
        if (!((d >> b) & 1u)) continue;
        if ((poset.up_row(a) & poset.up_row(b) & d) == 0) {
          directed = false;
          break;
        }
      }
    }
    if (directed) out.push_back(d);
  }
  return out;
}

std::vector<std::uint64_t> enumerate_upsets(const FinitePoset& poset) {
  auto downs = enumerate_downsets(poset, 1u << 20);
  const std::uint64_t full = poset.full_mask();
  std::vector<std::uint64_t> out;
  out.reserve(downs.size());
  for (std::uint64_t d : downs) out.push_back(full & ~d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sck
