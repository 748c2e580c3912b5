#include "monocert/jet.hpp"

namespace monocert {

SinCos sin_cos(double t) noexcept { return {std::sin(t), std::cos(t)}; }

}  // namespace monocert
