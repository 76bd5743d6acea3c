#pragma once

#include <stdexcept>
#include <string>

namespace lpk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct LevelError : Error { using Error::Error; };
struct ThresholdError : Error { using Error::Error; };
// A family's mean flags do not fit the slot it is used in.
struct ContractError : Error { using Error::Error; };
struct ConstructionError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
// Input energy outside the retained band of a multilinear sum.
struct BandError : Error { using Error::Error; };
struct BudgetError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

}  // namespace lpk
