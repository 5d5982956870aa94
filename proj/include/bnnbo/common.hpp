#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bnnbo {

/// Information source for one evaluation. Low is the cheap approximate
/// source, High is ground truth. Wire values are 1 and 2.
enum class Fidelity : std::uint8_t { Low = 1, High = 2 };

inline int fidelity_code(Fidelity f) { return static_cast<int>(f); }

inline Fidelity fidelity_from_code(int code) {
  if (code == 1) return Fidelity::Low;
  if (code == 2) return Fidelity::High;
  throw std::invalid_argument("fidelity code must be 1 or 2, got " + std::to_string(code));
}

// Error taxonomy. EvalPointError marks a single failed evaluation (the
// optimizer drops the record and continues); EvaluatorFailure is fatal for
// the run (checkpoint is persisted, run aborts).

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfBoundsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientCandidatesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TimeoutError : EvalPointError {
  using EvalPointError::EvalPointError;
};

struct EvaluatorFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProtocolError : EvaluatorFailure {
  using EvaluatorFailure::EvaluatorFailure;
};

struct ChildExitError : EvaluatorFailure {
  using EvaluatorFailure::EvaluatorFailure;
};

struct CorruptCheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoResultsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bnnbo
