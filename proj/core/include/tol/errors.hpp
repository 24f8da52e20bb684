#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tol {

// Caller broke a documented precondition (bad index, malformed witness, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// An exact computation was asked to exceed its configured search budget.
// Carries how far the search got so callers can report or retry with a
// larger budget instead of trusting a truncated answer.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t states_reached)
      : std::runtime_error(what + " (states reached: " + std::to_string(states_reached) + ")"),
        states_reached(states_reached) {}
  std::uint64_t states_reached = 0;
};

// A game-protocol rule was violated mid-run (e.g. an adversary emitted a
// label that empties the version space in a realizable game).
class ProtocolViolation : public std::runtime_error {
 public:
  ProtocolViolation(const std::string& what, int round)
      : std::runtime_error("round " + std::to_string(round) + ": " + what), round(round) {}
  int round = 0;
};

// A declared experiment inequality failed (used by the sweep drivers).
class SweepAssertionError : public std::runtime_error {
 public:
  explicit SweepAssertionError(const std::string& what) : std::runtime_error(what) {}
};

#define TOL_REQUIRE(cond, msg)                       \
  do {                                               \
    if (!(cond)) throw ::tol::ContractViolation(msg); \
  } while (0)

}  // namespace tol
