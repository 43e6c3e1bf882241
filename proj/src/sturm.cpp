#include "swr/sturm.hpp"

#include <algorithm>

namespace swr {

SturmChain SturmChain::build(const UniPoly& p) {
  if (p.is_zero()) throw usage_error("Sturm chain of the zero polynomial");
  SturmChain chain;
  chain.seq.push_back(p);
  if (p.degree() == 0) return chain;
  chain.seq.push_back(p.derivative());
  while (chain.seq.back().degree() > 0) {
    UniPoly rem =
        UniPoly::divrem(chain.seq[chain.seq.size() - 2], chain.seq.back())
            .second;
    if (rem.is_zero()) break;  // p was not squarefree; the chain still works
                               // for the gcd-free prefix counts
    // scale by a positive constant to keep numbers small; signs survive
    rem = rem.scaled(Rational(1) / abs(rem.lead()));
    chain.seq.push_back(-rem);
  }
  return chain;
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) signs.push_back(sign(p.eval(x)));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& p : seq) {
    int s = p.is_zero() ? 0 : sign(p.lead());
    if (!p.is_zero() && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& p : seq)
    signs.push_back(p.is_zero() ? 0 : sign(p.lead()));
  return count_variations(signs);
}

int count_roots_in(const UniPoly& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.is_zero()) throw usage_error("root count of the zero polynomial");
  UniPoly sf = p.squarefree_part();
  if (sf.degree() == 0) return 0;
  SturmChain chain = SturmChain::build(sf);
  // V(a) - V(b) counts distinct roots in (a, b]; adjust the ends for the
  // requested openness.
  int va = lo.kind == Endpoint::NegInf ? chain.variations_at_neg_inf()
                                       : chain.variations_at(lo.value);
  int vb = hi.kind == Endpoint::PosInf ? chain.variations_at_pos_inf()
                                       : chain.variations_at(hi.value);
  int count = va - vb;
  if (lo.kind == Endpoint::Finite && lo.closed && sf.eval(lo.value) == 0)
    ++count;
  if (hi.kind == Endpoint::Finite && !hi.closed && sf.eval(hi.value) == 0)
    --count;
  return count;
}

int count_real_roots_with_multiplicity(const UniPoly& p) {
  if (p.is_zero())
    throw usage_error("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  int total = 0;
  auto factors = p.squarefree_decomposition();
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() == 0) continue;
    total += static_cast<int>(i + 1) *
             count_roots_in(factors[i], Endpoint::neg_inf(),
                            Endpoint::pos_inf());
  }
  return total;
}

bool is_real_rooted(const UniPoly& p) {
  if (p.is_zero()) throw usage_error("real-rootedness of zero polynomial");
  return count_real_roots_with_multiplicity(p) == p.degree();
}

namespace {

struct Segment {
  Rational lo, hi;
  int count;
};

}  // namespace

std::vector<RootBox> isolate_roots(const UniPoly& p) {
  if (p.is_zero()) throw usage_error("isolate_roots of the zero polynomial");
  std::vector<RootBox> out;
  if (p.degree() == 0) return out;

  UniPoly sf = p.squarefree_part();
  SturmChain chain = SturmChain::build(sf);
  Rational bound = sf.cauchy_root_bound();

  // multiplicity lookup via Yun factors
  auto factors = p.squarefree_decomposition();
  auto multiplicity_at = [&](const Rational& lo, const Rational& hi,
                             bool exact) {
    for (size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() == 0) continue;
      int c = exact ? (factors[i].eval(hi) == 0 ? 1 : 0)
                    : count_roots_in(factors[i], Endpoint::open(lo),
                                     Endpoint::closed_at(hi));
      if (c > 0) return static_cast<int>(i + 1);
    }
    return 1;
  };

  std::vector<Segment> stack;
  int total = chain.variations_at(-bound) - chain.variations_at(bound);
  stack.push_back({-bound, bound, total});
  std::vector<RootBox> boxes;
  while (!stack.empty()) {
    Segment seg = stack.back();
    stack.pop_back();
    if (seg.count == 0) continue;
    if (seg.count == 1) {
      // Refine until the box is exact (root at hi) or has non-root endpoints.
      Rational lo = seg.lo, hi = seg.hi;
      while (true) {
        if (sf.eval(hi) == 0) {
          boxes.push_back(RootBox{hi, hi, true, 1});
          break;
        }
        if (sf.eval(lo) != 0) {
          boxes.push_back(RootBox{lo, hi, false, 1});
          break;
        }
        // lo is a root of sf but not the isolated one; shrink from below
        Rational mid = (lo + hi) / 2;
        if (chain.variations_at(mid) - chain.variations_at(hi) == 1)
          lo = mid;
        else
          hi = mid;
      }
      continue;
    }
    Rational mid = (seg.lo + seg.hi) / 2;
    int left = chain.variations_at(seg.lo) - chain.variations_at(mid);
    stack.push_back({seg.lo, mid, left});
    stack.push_back({mid, seg.hi, seg.count - left});
  }

  std::sort(boxes.begin(), boxes.end(),
            [](const RootBox& a, const RootBox& b) { return a.hi < b.hi; });
  for (auto& b : boxes)
    b.multiplicity = multiplicity_at(b.lo, b.hi, b.exact);
  return boxes;
}

RootBox refine_root_box(const UniPoly& sf, RootBox box,
                        const Rational& max_width) {
  if (box.exact) return box;
  // open box with non-root endpoints: the signs at the ends differ
  int sign_lo = sign(sf.eval(box.lo));
  while (box.hi - box.lo > max_width) {
    Rational mid = (box.lo + box.hi) / 2;
    int sign_mid = sign(sf.eval(mid));
    if (sign_mid == 0) {
      box.lo = box.hi = mid;
      box.exact = true;
      return box;
    }
    if (sign_mid == sign_lo)
      box.lo = mid;
    else
      box.hi = mid;
  }
  return box;
}

}  // namespace swr
