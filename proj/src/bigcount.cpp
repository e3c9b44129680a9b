#include "catg/bigcount.hpp"

#include "catg/errors.hpp"

namespace catg {

BigCount divide_exact(const BigCount& num, const BigCount& den) {
  if (den == 0) throw Error("division by zero");
  BigCount q = num / den;
  if (q * den != num)
    throw Error("non-exact division: " + num.str() + " / " + den.str());
  return q;
}

}  // namespace catg
