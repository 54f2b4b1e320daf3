#include "fg/torsion.hpp"

#include <stdexcept>

namespace fg {

namespace {

bool verify_certificate(const NormalWord& w, const Certificate& c) {
  // (1) k is the exact order of the root rotation.
  int root_order = w.tail().is_zero() ? 1 : 3;
  if (c.k != root_order || c.j < 1 || c.j >= c.k) return false;
  // (2) w^k stabilizes the first level.
  NormalWord wk = power(w, c.k);
  if (!wk.tail().is_zero()) return false;
  // (3) the section at the certificate vertex is w^j.
  if (c.vertex.depth() != 1) return false;
  return equal(section(wk, c.vertex), power(w, c.j));
}

}  // namespace

std::optional<Certificate> infinite_order_certificate(const NormalWord& w, int kmax) {
  if (is_identity(w)) return std::nullopt;
  int k = w.tail().is_zero() ? 1 : 3;
  if (k > kmax || k < 2) return std::nullopt;  // no room for 1 <= j < k
  NormalWord wk = power(w, k);
  WreathDecomp d = decompose(wk);
  if (!d.root.is_zero()) return std::nullopt;
  for (int v = 0; v < 3; ++v) {
    NormalWord pw;  // w^j, built incrementally
    for (int j = 1; j < k; ++j) {
      pw = multiply(pw, w);
      if (equal(d.sections[v], pw)) {
        Certificate cert{k, Vertex({static_cast<std::uint8_t>(v)}), j};
        if (!verify_certificate(w, cert)) {
          throw std::logic_error("certificate failed re-verification");
        }
        return cert;
      }
    }
  }
  return std::nullopt;
}

OrderResult order_of(const NormalWord& w, int kmax) {
  if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
  NormalWord acc;
  for (int k = 1; k <= kmax; ++k) {
    acc = multiply(acc, w);
    if (is_identity(acc)) return OrderResult{OrderResult::Kind::Finite, k, 0, std::nullopt};
  }
  if (auto cert = infinite_order_certificate(w, kmax)) {
    return OrderResult{OrderResult::Kind::Infinite, 0, 0, cert};
  }
  return OrderResult{OrderResult::Kind::ExceedsBound, 0, kmax, std::nullopt};
}

}  // namespace fg
