#pragma once

#include <cstdint>
#include <optional>

#include "fg/tree_group.hpp"
#include "fg/word.hpp"

// Element orders and sound infinite-order certificates.

namespace fg {

// Witness of infinite order by descent: k is the exact order of the root
// rotation of g, g^k stabilizes the first level, and the section of g^k
// at `vertex` equals g^j with 1 <= j < k. If g had finite order N then k
// would divide N and g^(jN/k) = 1 with 0 < jN/k < N, a contradiction.
struct Certificate {
  int k = 0;
  Vertex vertex;
  int j = 0;
};

struct OrderResult {
  enum class Kind { Finite, ExceedsBound, Infinite } kind = Kind::Finite;
  int order = 0;       // Finite only
  int bound = 0;       // ExceedsBound only
  std::optional<Certificate> certificate;  // Infinite only
};

// Searches depth-1 sections of w^k for a power of w, k being the exact
// root order. Every returned certificate is re-verified by recomputing
// its three defining facts. Absence of a certificate proves nothing.
std::optional<Certificate> infinite_order_certificate(const NormalWord& w, int kmax);

// Walks powers w, w^2, ... up to kmax looking for the identity; failing
// that, tries the certificate; failing that, reports the bound.
OrderResult order_of(const NormalWord& w, int kmax);

}  // namespace fg
