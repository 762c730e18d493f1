#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace dgrover {

// Exact bookkeeping of oracle usage. Quantum queries count applications of
// the phase oracle (Z_f / U_f); classical queries count plain evaluations of f
// used to verify candidates. Every charge is attributed to a named phase and
// the totals always equal the sum over phases.
class QueryLedger {
 public:
  struct PhaseCounts {
    std::uint64_t quantum = 0;
    std::uint64_t classical = 0;

    bool operator==(const PhaseCounts&) const = default;
  };

  void charge_quantum(std::string_view phase, std::uint64_t count = 1);
  void charge_classical(std::string_view phase, std::uint64_t count = 1);

  // Adds all counters of `other` into this ledger.
  void merge(const QueryLedger& other);

  std::uint64_t quantum_queries() const noexcept { return quantum_; }
  std::uint64_t classical_queries() const noexcept { return classical_; }
  std::uint64_t total() const noexcept { return quantum_ + classical_; }

  const std::map<std::string, PhaseCounts, std::less<>>& breakdown() const noexcept {
    return phases_;
  }
  PhaseCounts phase(std::string_view name) const;

  bool operator==(const QueryLedger&) const = default;

 private:
  std::uint64_t quantum_ = 0;
  std::uint64_t classical_ = 0;
  std::map<std::string, PhaseCounts, std::less<>> phases_;
};

namespace phase {
inline constexpr std::string_view oracle = "oracle";
inline constexpr std::string_view grover = "grover";
inline constexpr std::string_view counting = "counting";
inline constexpr std::string_view verify = "verify";
}  // namespace phase

}  // namespace dgrover
