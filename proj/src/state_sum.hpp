#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cjmm/braid.hpp"
#include "cjmm/cjones.hpp"
#include "cjmm/error.hpp"
#include "cjmm/series.hpp"

namespace cjmm::detail {

// Operator on `width` (1 or 2) adjacent strands starting at `pos`. The local
// code of a width-2 state is a * alpha + b with a on strand pos.
template <class Amp>
struct LocalOp {
  int pos = 0;
  int width = 2;
  std::vector<std::vector<std::pair<int, Amp>>> table;
};

using StateCode = std::uint64_t;

template <class Ring>
class StateSum {
 public:
  using Amp = typename Ring::Amp;
  using Op = LocalOp<Amp>;
  using Vec = std::unordered_map<StateCode, Amp>;

  StateSum(const Ring& ring, int alpha) : ring_(ring), alpha_(alpha) {
    for (int i = 0; i < alpha; ++i) {
      // Pivot factor s^H on v_i.
      weight_.push_back(ring_.from_u(LaurentPoly::monomial(Variable::U, 2 * (alpha - 1 - 2 * i))));
    }
  }

  Op from_crossing(const CrossingOperator& r, int pos) const {
    Op op;
    op.pos = pos;
    op.width = 2;
    op.table.resize(static_cast<std::size_t>(alpha_ * alpha_));
    for (int i = 0; i < alpha_; ++i) {
      for (int j = 0; j < alpha_; ++j) {
        for (const auto& e : r.image(i, j)) {
          op.table[i * alpha_ + j].emplace_back(e.left * alpha_ + e.right,
                                                ring_.prepare(ring_.from_u(e.coefficient)));
        }
      }
    }
    return op;
  }

  // <v_0| (id (x) qtr_{1..n-1}) (ops) |v_0> for an equivariant product of
  // local operators on `strands` strands.
  Amp open_trace(std::vector<Op> ops, int strands) const {
    while (strands >= 4 && eliminate_last(ops, strands)) {
      --strands;
    }
    const auto pw = powers(strands);
    Amp total = ring_.zero();
    const StateCode inputs = pw[strands] / static_cast<StateCode>(alpha_);
    for (StateCode rest = 0; rest < inputs; ++rest) {
      const StateCode code = rest * static_cast<StateCode>(alpha_);
      Vec v;
      v.emplace(code, ring_.one());
      for (const auto& op : ops) {
        v = apply(v, op, pw);
        if (v.empty()) {
          break;
        }
      }
      auto it = v.find(code);
      if (it == v.end()) {
        continue;
      }
      Amp w = it->second;
      for (int k = 1; k < strands; ++k) {
        w = ring_.mul(w, weight_[digit(code, k, pw)]);
      }
      ring_.add_to(total, w);
    }
    return total;
  }

 private:
  std::vector<StateCode> powers(int strands) const {
    std::vector<StateCode> pw(static_cast<std::size_t>(strands) + 1, 1);
    for (int k = 1; k <= strands; ++k) {
      pw[k] = pw[k - 1] * static_cast<StateCode>(alpha_);
    }
    return pw;
  }

  int digit(StateCode code, int k, const std::vector<StateCode>& pw) const {
    return static_cast<int>((code / pw[k]) % static_cast<StateCode>(alpha_));
  }

  Vec apply(const Vec& v, const Op& op, const std::vector<StateCode>& pw) const {
    Vec out;
    out.reserve(v.size() * 2);
    for (const auto& [code, amp] : v) {
      int local;
      StateCode base;
      if (op.width == 2) {
        const int a = digit(code, op.pos, pw);
        const int b = digit(code, op.pos + 1, pw);
        local = a * alpha_ + b;
        base = code - a * pw[op.pos] - b * pw[op.pos + 1];
      } else {
        local = digit(code, op.pos, pw);
        base = code - local * pw[op.pos];
      }
      for (const auto& [out_local, coef] : op.table[local]) {
        StateCode next;
        if (op.width == 2) {
          next = base + (out_local / alpha_) * pw[op.pos] + (out_local % alpha_) * pw[op.pos + 1];
        } else {
          next = base + out_local * pw[op.pos];
        }
        auto [it, fresh] = out.try_emplace(next, ring_.zero());
        ring_.add_product(it->second, amp, coef);
      }
    }
    for (auto it = out.begin(); it != out.end();) {
      it = ring_.is_zero(it->second) ? out.erase(it) : std::next(it);
    }
    return out;
  }

  // Replaces the operators touching the last strand by their partial trace
  // over it, provided they form one cyclic run confined to the last three
  // strands. Returns false when the shape does not allow it.
  bool eliminate_last(std::vector<Op>& ops, int strands) const {
    const int last = strands - 1;
    const int len = static_cast<int>(ops.size());
    std::vector<int> touching;
    for (int i = 0; i < len; ++i) {
      if (ops[i].pos + ops[i].width - 1 >= last) {
        touching.push_back(i);
      }
    }
    if (touching.empty()) {
      return false;
    }
    // The window is the complement of the largest cyclic gap.
    const int k = static_cast<int>(touching.size());
    int best_gap = -1;
    int start = touching[0];
    for (int t = 0; t < k; ++t) {
      const int cur = touching[t];
      const int nxt = t + 1 < k ? touching[t + 1] : touching[0] + len;
      if (nxt - cur - 1 > best_gap) {
        best_gap = nxt - cur - 1;
        start = nxt % len;
      }
    }
    const int wlen = len - best_gap;
    int base = last;
    for (int t = 0; t < wlen; ++t) {
      base = std::min(base, ops[(start + t) % len].pos);
    }
    if (base < last - 2) {
      return false;
    }
    const int rw = last - base + 1;
    const auto pw = powers(rw);
    Op merged;
    merged.pos = base;
    merged.width = rw - 1;
    const int out_states = rw == 3 ? alpha_ * alpha_ : alpha_;
    merged.table.resize(static_cast<std::size_t>(out_states));
    for (StateCode in = 0; in < pw[rw]; ++in) {
      Vec v;
      v.emplace(in, ring_.one());
      for (int t = 0; t < wlen && !v.empty(); ++t) {
        Op local = ops[(start + t) % len];
        local.pos -= base;
        v = apply(v, local, pw);
      }
      const int traced = digit(in, rw - 1, pw);
      const int in_code = local_code(in, rw - 1, pw);
      for (const auto& [out, amp] : v) {
        if (digit(out, rw - 1, pw) != traced) {
          continue;
        }
        const int out_code = local_code(out, rw - 1, pw);
        auto& row = merged.table[in_code];
        auto hit = std::find_if(row.begin(), row.end(),
                                [&](const auto& e) { return e.first == out_code; });
        Amp term = ring_.mul(amp, weight_[traced]);
        if (hit == row.end()) {
          row.emplace_back(out_code, std::move(term));
        } else {
          ring_.add_to(hit->second, term);
        }
      }
    }
    for (auto& row : merged.table) {
      std::erase_if(row, [&](const auto& e) { return ring_.is_zero(e.second); });
      for (auto& e : row) {
        e.second = ring_.prepare(std::move(e.second));
      }
    }
    std::vector<Op> next;
    next.reserve(static_cast<std::size_t>(len - wlen + 1));
    next.push_back(std::move(merged));
    for (int t = wlen; t < len; ++t) {
      next.push_back(std::move(ops[(start + t) % len]));
    }
    ops = std::move(next);
    return true;
  }

  // Code of the first `w` strands of a local state, most significant first.
  int local_code(StateCode code, int w, const std::vector<StateCode>& pw) const {
    int c = 0;
    for (int k = 0; k < w; ++k) {
      c = c * alpha_ + digit(code, k, pw);
    }
    return c;
  }

  const Ring& ring_;
  int alpha_;
  std::vector<Amp> weight_;
};

// Exact amplitudes: Laurent polynomials in u.
struct LaurentRing {
  using Amp = LaurentPoly;
  Amp zero() const { return LaurentPoly(Variable::U); }
  Amp one() const { return LaurentPoly::constant(Variable::U, 1); }
  bool is_zero(const Amp& a) const { return a.is_zero(); }
  Amp from_u(const LaurentPoly& p) const { return p; }
  Amp prepare(Amp a) const { return a; }
  Amp mul(const Amp& a, const Amp& b) const { return a * b; }
  void add_to(Amp& t, const Amp& a) const { t += a; }
  void add_product(Amp& t, const Amp& a, const Amp& b) const { t += a * b; }
};

// Amplitude u^r f(h) with 0 <= r < 4 and f truncated after h^cap. `up` caches
// (1+h) f for operator entries, used when residues overflow past u^4.
struct HAmp {
  int r = -1;
  std::vector<Integer> c;
  std::vector<Integer> up;
};

class HSeriesRing {
 public:
  using Amp = HAmp;
  explicit HSeriesRing(int cap) : cap_(cap) {}

  Amp zero() const { return HAmp{}; }
  Amp one() const;
  bool is_zero(const Amp& a) const;
  Amp from_u(const LaurentPoly& p) const;
  Amp prepare(Amp a) const;
  Amp mul(const Amp& a, const Amp& b) const;
  void add_to(Amp& t, const Amp& a) const;
  void add_product(Amp& t, const Amp& a, const Amp& b) const;

  int cap() const { return cap_; }

 private:
  int cap_;
};

/// V_alpha = <v_0|T|v_0> * u^(-w (alpha^2 - 1)), as a Laurent polynomial in u.
LaurentPoly open_strand_invariant_u(const BraidWord& b, int alpha);

/// Same quantity in truncated h-series arithmetic; throws ConventionViolation
/// if the result is not a power of q times a series.
TruncSeries open_strand_invariant_h(const BraidWord& b, int alpha, int cap);

}  // namespace cjmm::detail
