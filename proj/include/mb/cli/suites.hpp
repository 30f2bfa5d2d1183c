#pragma once

#include "mb/io/json.hpp"
#include "mb/monad/monad.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace mb {

struct SuiteConfig {
  std::string suite;             // laws | bar | gabriel | excisive | morita | realize
  std::string monad = "identity";
  std::string context;           // fpab | chain-Q | chain-Z; empty picks the monad's natural home
  std::size_t N = 4;
  std::uint64_t seed = 0xC0FFEE;
  std::string preset;            // suite-specific, see README
  std::string input;             // realize: simplicial JSON file
  std::string out;               // empty: stdout
};

struct SuiteResult {
  CheckReport report;
  Json footer = Json::object();  // merged into the summary line
  std::string text() const;      // JSON lines
  int exit_code() const { return report.pass() ? 0 : 1; }
};

/// Either context, never both.
struct ResolvedMonad {
  MonadPtr<FpAbContext> fpab;
  MonadPtr<ChainContext> chain;
};
/// identity | tensor:<C2|Z2|Z|dual|ext> | tensoralg | homtensor:<S>:<P>. Throws InputError.
ResolvedMonad make_monad(const std::string& name, const std::string& context);

/// Throws InputError on a malformed config.
SuiteResult run(const SuiteConfig& config);

std::string hex(std::uint64_t v);
std::uint64_t parse_hex(const std::string& s);

}  // namespace mb
