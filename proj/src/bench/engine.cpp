#include "dyncolor/bench/engine.hpp"

#include "dyncolor/arboricity.hpp"
#include "dyncolor/delta1.hpp"
#include "dyncolor/error.hpp"
#include "dyncolor/explicit2.hpp"
#include "dyncolor/full2.hpp"
#include "dyncolor/incimp2.hpp"
#include "dyncolor/inclog.hpp"

namespace dyncolor::bench {

bool EngineAdapter::conn_query(VertexId, VertexId) {
  throw Error(Errc::UnsupportedEvent, std::string(name()) + ": conn_query");
}

namespace {

ColorId two_color(bool c) { return c ? 1 : 2; }

class Full2Adapter final : public EngineAdapter {
 public:
  explicit Full2Adapter(std::size_t n) : engine_(n + 2), n_(n) {}
  std::string_view name() const override { return "full2"; }
  bool fully_dynamic() const override { return true; }
  bool bipartite() const override { return true; }
  bool supports_conn_query() const override { return true; }
  InsertOutcome insert(VertexId u, VertexId v) override {
    check(u);
    check(v);
    return engine_.insert(u, v);
  }
  void remove(VertexId u, VertexId v) override {
    check(u);
    check(v);
    engine_.remove(u, v);
  }
  ColorId query(VertexId v) override {
    check(v);
    return two_color(engine_.get_color(v));
  }
  bool conn_query(VertexId u, VertexId v) override { return engine_.connected_via_coloring(u, v); }
  ColorId peek(VertexId v) override { return two_color(engine_.color_of(v)); }
  const Metrics& metrics() const override { return engine_.metrics(); }
  std::uint64_t structural_steps() const override { return engine_.structural_steps(); }

 private:
  // The auxiliary vertices are not addressable from traces.
  void check(VertexId v) const {
    if (v >= n_) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  Full2Engine engine_;
  std::size_t n_;
};

template <class Engine>
class IncrementalBase : public EngineAdapter {
 public:
  bool fully_dynamic() const override { return false; }
  bool bipartite() const override { return true; }
  void remove(VertexId, VertexId) override {
    throw Error(Errc::UnsupportedEvent, std::string(name()) + ": delete");
  }
  const Metrics& metrics() const override { return engine_.metrics(); }

 protected:
  explicit IncrementalBase(std::size_t n) : engine_(n) {}
  Engine engine_;
};

class Explicit2Adapter final : public IncrementalBase<Explicit2Engine> {
 public:
  explicit Explicit2Adapter(std::size_t n) : IncrementalBase(n) {}
  std::string_view name() const override { return "inc2"; }
  InsertOutcome insert(VertexId u, VertexId v) override { return engine_.insert(u, v); }
  ColorId query(VertexId v) override { return two_color(engine_.get_color(v)); }
  ColorId peek(VertexId v) override { return two_color(engine_.color_of(v)); }
  std::uint64_t structural_steps() const override { return engine_.metrics().steps; }
};

class LogColorAdapter final : public IncrementalBase<LogColorEngine> {
 public:
  explicit LogColorAdapter(std::size_t n) : IncrementalBase(n) {}
  std::string_view name() const override { return "inclog"; }
  InsertOutcome insert(VertexId u, VertexId v) override { return engine_.union_insert(u, v); }
  ColorId query(VertexId v) override { return engine_.get_color(v); }
  ColorId peek(VertexId v) override { return engine_.color_of(v); }
  std::uint64_t structural_steps() const override { return engine_.metrics().steps; }
};

class Implicit2Adapter final : public IncrementalBase<Implicit2Engine> {
 public:
  explicit Implicit2Adapter(std::size_t n) : IncrementalBase(n) {}
  std::string_view name() const override { return "incimp2"; }
  InsertOutcome insert(VertexId u, VertexId v) override { return engine_.insert(u, v); }
  ColorId query(VertexId v) override { return two_color(engine_.get_color(v)); }
  ColorId peek(VertexId v) override { return two_color(engine_.color_of(v)); }
  std::uint64_t structural_steps() const override { return engine_.metrics().steps; }
};

template <class Engine>
class GeneralBase : public EngineAdapter {
 public:
  bool fully_dynamic() const override { return true; }
  bool bipartite() const override { return false; }
  InsertOutcome insert(VertexId u, VertexId v) override {
    engine_.insert(u, v);
    return InsertOutcome::Added;
  }
  void remove(VertexId u, VertexId v) override { engine_.remove(u, v); }
  ColorId query(VertexId v) override { return engine_.get_color(v); }
  ColorId peek(VertexId v) override { return engine_.color_of(v); }
  const Metrics& metrics() const override { return engine_.metrics(); }
  std::uint64_t structural_steps() const override { return engine_.metrics().steps; }
  std::string audit() const override { return engine_.audit(); }

 protected:
  template <class... Args>
  explicit GeneralBase(Args... args) : engine_(args...) {}
  Engine engine_;
};

class Delta1Adapter final : public GeneralBase<DeltaPlusOneEngine> {
 public:
  explicit Delta1Adapter(const EngineConfig& c) : GeneralBase(c.n, c.mcap, c.dcap) {}
  std::string_view name() const override { return "delta1"; }
};

class ArbAdapter final : public GeneralBase<ArbEngine> {
 public:
  explicit ArbAdapter(const EngineConfig& c) : GeneralBase(c.n, c.gamma, c.dcap) {}
  std::string_view name() const override { return "arb"; }
};

}  // namespace

const std::vector<std::string>& engine_names() {
  static const std::vector<std::string> names = {"full2", "inc2", "inclog", "incimp2", "delta1", "arb"};
  return names;
}

std::unique_ptr<EngineAdapter> make_engine(std::string_view name, const EngineConfig& config) {
  if (config.n == 0) throw Error(Errc::InvalidSpec, "engine needs n > 0");
  if (name == "full2") return std::make_unique<Full2Adapter>(config.n);
  if (name == "inc2") return std::make_unique<Explicit2Adapter>(config.n);
  if (name == "inclog") return std::make_unique<LogColorAdapter>(config.n);
  if (name == "incimp2") return std::make_unique<Implicit2Adapter>(config.n);
  if (name == "delta1") return std::make_unique<Delta1Adapter>(config);
  if (name == "arb") return std::make_unique<ArbAdapter>(config);
  throw Error(Errc::InvalidSpec, "unknown engine '" + std::string(name) + "'");
}

}  // namespace dyncolor::bench
