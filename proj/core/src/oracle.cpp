#include "trilocal/oracle.hpp"

#include "trilocal/error.hpp"

namespace trilocal {

namespace {

template <class Op>
OracleValue combine(const OracleValue& a, const OracleValue& b, Op op) {
  return std::visit(
      [&](const auto& x) -> OracleValue {
        using T = std::decay_t<decltype(x)>;
        if (!b.holds<T>()) throw MismatchError("oracle values from different rings");
        return OracleValue(op(x, b.as<T>()));
      },
      a.storage());
}

}  // namespace

bool OracleValue::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, value_);
}

std::string OracleValue::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, value_);
}

OracleValue operator+(const OracleValue& a, const OracleValue& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

OracleValue operator*(const OracleValue& a, const OracleValue& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

OracleValue OracleValue::operator-() const {
  return std::visit([](const auto& x) { return OracleValue(-x); }, value_);
}

}  // namespace trilocal
