#pragma once

#include "lsra/rational.hpp"

namespace lsra {

/// Comparison of an atomic constraint. NEQ arises only from negating EQ.
enum class Relation { EQ, NEQ, LE, LT, GE, GT };

/// Involution: negate(negate(r)) == r.
constexpr Relation negate(Relation r) {
    switch (r) {
    case Relation::EQ:  return Relation::NEQ;
    case Relation::NEQ: return Relation::EQ;
    case Relation::LE:  return Relation::GT;
    case Relation::LT:  return Relation::GE;
    case Relation::GE:  return Relation::LT;
    case Relation::GT:  return Relation::LE;
    }
    return Relation::EQ; // unreachable
}

inline bool holds(const Rational& lhs, Relation r, const Rational& rhs) {
    switch (r) {
    case Relation::EQ:  return lhs == rhs;
    case Relation::NEQ: return lhs != rhs;
    case Relation::LE:  return lhs <= rhs;
    case Relation::LT:  return lhs < rhs;
    case Relation::GE:  return lhs >= rhs;
    case Relation::GT:  return lhs > rhs;
    }
    return false; // unreachable
}

constexpr const char* relation_str(Relation r) {
    switch (r) {
    case Relation::EQ:  return "=";
    case Relation::NEQ: return "!=";
    case Relation::LE:  return "<=";
    case Relation::LT:  return "<";
    case Relation::GE:  return ">=";
    case Relation::GT:  return ">";
    }
    return "?"; // unreachable
}

} // namespace lsra
