#include "opid/compose.hpp"

#include <stdexcept>

namespace opid {

namespace {

using Kind = MonomialNode::Kind;

// Replaces the argument leaf with 0-based index `target` by f(leaf).
template <class F>
MonomialNode replace_arg(const MonomialNode& n, unsigned target, unsigned& seen,
                         F&& f) {
  switch (n.kind) {
    case Kind::Arg:
      return seen++ == target ? f(n) : n;
    case Kind::Op:
      return MonomialNode::op(replace_arg(n.children[0], target, seen, f));
    case Kind::Product: {
      std::vector<MonomialNode> items;
      for (const auto& c : n.children)
        items.push_back(replace_arg(c, target, seen, f));
      return MonomialNode::product(std::move(items));
    }
  }
  return n;
}

void check_arg(const OperatorMonomial& m, unsigned i) {
  if (i < 1 || i > m.degree())
    throw std::out_of_range("argument index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(m.degree()));
}

}  // namespace

OperatorMonomial comp_m_B(const OperatorMonomial& m, unsigned i) {
  check_arg(m, i);
  unsigned seen = 0;
  return OperatorMonomial(replace_arg(m.root(), i - 1, seen, [](const auto&) {
    return MonomialNode::product({MonomialNode::arg(), MonomialNode::arg()});
  }));
}

OperatorMonomial comp_B_m(const OperatorMonomial& m, unsigned j) {
  if (j == 1) return OperatorMonomial(MonomialNode::product({m.root(), MonomialNode::arg()}));
  if (j == 2) return OperatorMonomial(MonomialNode::product({MonomialNode::arg(), m.root()}));
  throw std::out_of_range("side index must be 1 or 2");
}

OperatorMonomial comp_m_L(const OperatorMonomial& m, unsigned i) {
  check_arg(m, i);
  unsigned seen = 0;
  return OperatorMonomial(replace_arg(m.root(), i - 1, seen, [](const auto& a) {
    return MonomialNode::op(a);
  }));
}

OperatorMonomial comp_L_m(const OperatorMonomial& m) {
  return OperatorMonomial(MonomialNode::op(m.root()));
}

OperatorPolynomial OperatorPolynomial::generic(
    RingPtr ring, const std::vector<OperatorMonomial>& basis,
    const std::vector<Polynomial>& coeffs) {
  if (basis.size() != coeffs.size())
    throw std::invalid_argument("basis and coefficient lists differ in size");
  OperatorPolynomial out(std::move(ring));
  for (std::size_t k = 0; k < basis.size(); ++k) out.add(basis[k], coeffs[k]);
  return out;
}

void OperatorPolynomial::add(const OperatorMonomial& m, const Polynomial& c) {
  if (c.is_zero()) return;
  if (terms_.empty()) {
    degree_ = m.degree();
    mult_ = m.multiplicity();
  } else if (m.degree() != degree_ || m.multiplicity() != mult_) {
    throw std::invalid_argument("inhomogeneous operator polynomial");
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial OperatorPolynomial::coefficient(const OperatorMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Polynomial(ring_) : it->second;
}

std::string OperatorPolynomial::to_string(bool collapse_powers) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    std::string ms = m.render(RenderStyle::Letters, collapse_powers);
    if (!out.empty()) out += " + ";
    if (cs == "1")
      out += ms;
    else if (c.size() > 1)
      out += "(" + cs + ")*" + ms;
    else
      out += cs + "*" + ms;
  }
  return out;
}

std::string ConsequenceSpec::label() const {
  auto s = [](unsigned v) { return std::to_string(v); };
  switch (kind) {
    case Kind::MB_THEN_L: return "(R o" + s(i) + " B) o" + s(k) + " L";
    case Kind::L_AFTER_MB: return "L o (R o" + s(i) + " B)";
    case Kind::BM_THEN_L: return "(B o" + s(j) + " R) o" + s(k) + " L";
    case Kind::L_AFTER_BM: return "L o (B o" + s(j) + " R)";
    case Kind::ML_THEN_B: return "(R o" + s(i) + " L) o" + s(k) + " B";
    case Kind::B_AFTER_ML: return "B o" + s(j) + " (R o" + s(i) + " L)";
    case Kind::LM_THEN_B: return "(L o R) o" + s(k) + " B";
    case Kind::B_AFTER_LM: return "B o" + s(j) + " (L o R)";
  }
  return {};
}

OperatorMonomial ConsequenceSpec::apply(const OperatorMonomial& m) const {
  switch (kind) {
    case Kind::MB_THEN_L: return comp_m_L(comp_m_B(m, i), k);
    case Kind::L_AFTER_MB: return comp_L_m(comp_m_B(m, i));
    case Kind::BM_THEN_L: return comp_m_L(comp_B_m(m, j), k);
    case Kind::L_AFTER_BM: return comp_L_m(comp_B_m(m, j));
    case Kind::ML_THEN_B: return comp_m_B(comp_m_L(m, i), k);
    case Kind::B_AFTER_ML: return comp_B_m(comp_m_L(m, i), j);
    case Kind::LM_THEN_B: return comp_m_B(comp_L_m(m), k);
    case Kind::B_AFTER_LM: return comp_B_m(comp_L_m(m), j);
  }
  return m;
}

std::vector<ConsequenceSpec> consequence_specs(unsigned p) {
  using K = ConsequenceSpec::Kind;
  std::vector<ConsequenceSpec> out;
  for (unsigned i = 1; i <= p; ++i) {
    for (unsigned k = 1; k <= p + 1; ++k) out.push_back({K::MB_THEN_L, i, 0, k});
    out.push_back({K::L_AFTER_MB, i, 0, 0});
  }
  for (unsigned j = 1; j <= 2; ++j) {
    for (unsigned k = 1; k <= p + 1; ++k) out.push_back({K::BM_THEN_L, 0, j, k});
    out.push_back({K::L_AFTER_BM, 0, j, 0});
  }
  for (unsigned i = 1; i <= p; ++i) {
    for (unsigned k = 1; k <= p; ++k) out.push_back({K::ML_THEN_B, i, 0, k});
    for (unsigned j = 1; j <= 2; ++j) out.push_back({K::B_AFTER_ML, i, j, 0});
  }
  for (unsigned k = 1; k <= p; ++k) out.push_back({K::LM_THEN_B, 0, 0, k});
  for (unsigned j = 1; j <= 2; ++j) out.push_back({K::B_AFTER_LM, 0, j, 0});
  return out;
}

std::vector<Consequence> consequences(const OperatorPolynomial& R) {
  std::vector<Consequence> out;
  if (R.is_zero()) return out;
  for (const auto& spec : consequence_specs(R.degree())) {
    Consequence c{spec, R.map([&](const OperatorMonomial& m) { return spec.apply(m); }),
                  std::nullopt};
    for (std::size_t k = 0; k < out.size(); ++k)
      if (!out[k].duplicate_of && out[k].value == c.value) {
        c.duplicate_of = k;
        break;
      }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace opid
