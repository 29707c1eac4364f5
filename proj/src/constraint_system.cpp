#include "luk/constraint_system.hpp"

namespace luk {

template class ConstraintSystem<SmallRational>;
template class ConstraintSystem<Rational>;

}  // namespace luk
