#pragma once

#include <stdexcept>
#include <string>

namespace sheetcalc {

/// Invalid Cartan type, rank outside the configured budget, or an object
/// used without the context it needs.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands whose shapes or ambient dimensions disagree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A combinatorial or linear-algebra workload exceeded its configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix representation failed a structural check (non-homomorphism,
/// non-nilpotent image of a nilpotent element).
class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invariant-generator construction failed (dependence, non-invariance,
/// harmonic projection impossible).
class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sheetcalc
