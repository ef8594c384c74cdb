#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dyncolor/types.hpp"

namespace dyncolor::bench {

struct EngineConfig {
  std::size_t n = 0;  // real vertices; full2 adds its two auxiliary ones
  std::size_t mcap = 0;
  std::size_t dcap = 0;
  std::size_t gamma = 0;
};

// Uniform face of the six engines for the runner. Two-color engines report
// colors 1 and 2.
class EngineAdapter {
 public:
  virtual ~EngineAdapter() = default;

  virtual std::string_view name() const = 0;
  virtual bool fully_dynamic() const = 0;
  virtual bool bipartite() const = 0;
  virtual bool supports_conn_query() const { return false; }

  // Engines that never reject report Added for every accepted edge.
  virtual InsertOutcome insert(VertexId u, VertexId v) = 0;
  virtual void remove(VertexId u, VertexId v) = 0;
  // Counted query.
  virtual ColorId query(VertexId v) = 0;
  virtual bool conn_query(VertexId u, VertexId v);
  // Uncounted read for checking.
  virtual ColorId peek(VertexId v) = 0;

  virtual const Metrics& metrics() const = 0;
  virtual std::uint64_t structural_steps() const = 0;
  // Deep consistency check where the engine has one; empty when consistent.
  virtual std::string audit() const { return {}; }
};

const std::vector<std::string>& engine_names();
// Throws Error(InvalidSpec) for unknown names.
std::unique_ptr<EngineAdapter> make_engine(std::string_view name, const EngineConfig& config);

}  // namespace dyncolor::bench
