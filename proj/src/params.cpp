#include "aqs/params.hpp"

#include "aqs/error.hpp"

namespace aqs {

ProtocolParams ProtocolParams::derive(std::size_t n, std::size_t l, std::size_t k,
                                      std::size_t m2) {
  ProtocolParams p;
  p.n = n;
  p.l = l;
  p.k = k;
  p.m2 = m2;
  p.m1 = n + m2 + k;
  p.m3 = l + k;
  p.n1 = l + p.m1;
  p.n2 = l + p.m3;
  return p;
}

void ProtocolParams::validate() const {
  auto positive = [](std::size_t v, const char* name) {
    if (v == 0) throw Error(ErrorCode::InvalidParams, std::string(name) + " must be positive");
  };
  positive(n, "n");
  positive(l, "l");
  positive(k, "k");
  positive(m1, "m1");
  positive(m2, "m2");
  positive(m3, "m3");
  positive(n1, "n1");
  positive(n2, "n2");
  if (m1 != n + m2 + k) throw Error(ErrorCode::InvalidParams, "m1 must equal n + m2 + k");
  if (m3 != l + k) throw Error(ErrorCode::InvalidParams, "m3 must equal l + k");
  if (n1 != l + m1) throw Error(ErrorCode::InvalidParams, "n1 must equal l + m1");
  if (n2 != l + m3) throw Error(ErrorCode::InvalidParams, "n2 must equal l + m3");
}

}  // namespace aqs
