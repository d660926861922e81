#pragma once

#include "eulerzeta/symbolic.hpp"

namespace eulerzeta {

/// Exact closed form of the Euler integral int_0^{pi/2} x^(2l-1) log(sin x) dx:
///
///   -((pi/2)^(2l) / (2l)) log 2
///   + ((2l-1)! / 2^(2l)) sum_{k=1}^{l-1} (-1)^(k-1) pi^(2(l-k)) / (2(l-k))! (1 - 2^(-2k)) zeta(2k+1)
///   + (-1)^(l-1) (2l-1)! (2^(2l+1) - 1) / 2^(4l) zeta(2l+1)
///
/// Throws PreconditionError for l < 1.
SymbolicConstant euler_integral_closed_form(int l);

/// The series-free part of the log-product evaluation of the same integral,
///   (pi/2)^(2l) ((log pi - log 2) / (2l) - 1/(2l)^2).
/// The full integral is this minus (pi/2)^(2l)/2 times the tail series S(l).
SymbolicConstant euler_integral_elementary_part(int l);

}  // namespace eulerzeta
