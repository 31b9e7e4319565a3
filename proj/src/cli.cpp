#include "vbrick/cli.hpp"

#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "vbrick/quadforms.hpp"
#include "vbrick/verlinde.hpp"

namespace vbrick::cli {

namespace {

using nlohmann::json;

// Runs f(i) for i in [0, n), possibly on several threads; results land in a
// pre-sized vector so output stays in deterministic order.
template <class T, class F>
std::vector<T> compute_cells(std::size_t n, F&& f) {
  std::vector<T> out(n);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, n));
  if (workers < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          out[i] = f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next.store(n);
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

json meta_object(const RunConfig& cfg) {
  return json{{"version", kVersion}, {"epsilon", cfg.sign.epsilon()}, {"seed", cfg.seed}};
}

const char* mode_name(BrickMode m) {
  switch (m) {
    case BrickMode::mod4_zero: return "mod4-zero";
    case BrickMode::mod4_two: return "mod4-two";
    default: return "odd";
  }
}

struct DimsRow {
  int genus = 0, level = 0;
  Integer dim, dim_twisted;
  double residual = 0.0, residual_twisted = 0.0;
};

struct BricksRow {
  BrickTable table;
};

}  // namespace

void RunConfig::validate() const {
  if (genus_lo < 1 || genus_lo > genus_hi) throw std::invalid_argument("invalid genus range");
  if (level_lo < 1 || level_lo > level_hi) throw std::invalid_argument("invalid level range");
  if (precision_bits != 0 && precision_bits < 64)
    throw std::invalid_argument("precision must be at least 64 bits");
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto parse_int = [](const std::string& s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad range component: " + s);
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

std::optional<BrickMode> parse_brick_mode(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  if (text == "mod4-zero") return BrickMode::mod4_zero;
  if (text == "mod4-two") return BrickMode::mod4_two;
  if (text == "odd") return BrickMode::odd;
  throw std::invalid_argument("unknown brick mode: " + text);
}

int cmd_dims(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const std::size_t ng = static_cast<std::size_t>(cfg.genus_hi - cfg.genus_lo + 1);
  const std::size_t nk = static_cast<std::size_t>(cfg.level_hi - cfg.level_lo + 1);

  std::vector<DimsRow> rows;
  try {
    rows = compute_cells<DimsRow>(ng * nk, [&](std::size_t i) {
      DimsRow r;
      r.genus = cfg.genus_lo + static_cast<int>(i / nk);
      r.level = cfg.level_lo + static_cast<int>(i % nk);
      const FusionData fd = make_fusion_data(r.level);
      r.dim = verlinde_dim(fd, r.genus);
      r.dim_twisted = verlinde_dim_twisted(fd, r.genus);
      if (cfg.check_oracle) {
        const OracleResult o = verlinde_oracle(r.genus, r.level, false, cfg.precision_bits);
        const OracleResult ot = verlinde_oracle(r.genus, r.level, true, cfg.precision_bits);
        if (o.value != r.dim || ot.value != r.dim_twisted)
          throw inconsistency_error("oracle disagrees at genus " + std::to_string(r.genus) +
                                    " level " + std::to_string(r.level) + ": exact (" +
                                    r.dim.get_str() + ", " + r.dim_twisted.get_str() +
                                    ") vs oracle (" + o.value.get_str() + ", " +
                                    ot.value.get_str() + ")");
        r.residual = o.residual;
        r.residual_twisted = ot.residual;
      }
      return r;
    });
  } catch (const inconsistency_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const precision_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }

  switch (cfg.format) {
    case Format::table: {
      out << std::setw(6) << "genus" << std::setw(7) << "level" << std::setw(24) << "dim"
          << std::setw(24) << "dim'" << "\n";
      for (const auto& r : rows)
        out << std::setw(6) << r.genus << std::setw(7) << r.level << std::setw(24)
            << r.dim.get_str() << std::setw(24) << r.dim_twisted.get_str() << "\n";
      break;
    }
    case Format::csv: {
      out << "genus,level,dim,dim_twisted\n";
      for (const auto& r : rows)
        out << r.genus << "," << r.level << "," << r.dim.get_str() << ","
            << r.dim_twisted.get_str() << "\n";
      break;
    }
    case Format::json: {
      json doc;
      doc["meta"] = meta_object(cfg);
      doc["rows"] = json::array();
      for (const auto& r : rows)
        doc["rows"].push_back({{"genus", r.genus},
                               {"level", r.level},
                               {"dim", r.dim.get_str()},
                               {"dim_twisted", r.dim_twisted.get_str()}});
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_bricks(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const std::size_t ng = static_cast<std::size_t>(cfg.genus_hi - cfg.genus_lo + 1);
  const std::size_t nk = static_cast<std::size_t>(cfg.level_hi - cfg.level_lo + 1);

  std::vector<BricksRow> rows;
  try {
    rows = compute_cells<BricksRow>(ng * nk, [&](std::size_t i) {
      const int g = cfg.genus_lo + static_cast<int>(i / nk);
      const int k = cfg.level_lo + static_cast<int>(i % nk);
      return BricksRow{cfg.brick_mode ? make_brick_table(g, k, *cfg.brick_mode)
                                      : make_brick_table(g, k)};
    });
  } catch (const inconsistency_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  switch (cfg.format) {
    case Format::table: {
      for (const auto& row : rows) {
        const BrickTable& t = row.table;
        out << "genus " << t.genus << "  level " << t.level << "  mode " << mode_name(t.mode)
            << "\n";
        if (t.mode == BrickMode::odd) {
          out << "  multiplicity " << t.odd_multiplicity.get_str() << " of the level-one space"
              << (t.odd_conjugate ? " (conjugate)" : "") << "\n";
          out << "  check: " << verlinde_dim(t.genus, t.level).get_str() << " = "
              << t.odd_multiplicity.get_str() << " * 2^" << t.genus << "\n";
        } else {
          const bool zero_mode = t.mode == BrickMode::mod4_zero;
          const Integer others = pow2(2 * static_cast<unsigned long>(t.genus)) - 1;
          const auto counts = count_by_arf_closed(t.genus);
          const Integer c0 = zero_mode ? Integer(1) : counts.first;
          const Integer c1 = zero_mode ? others : counts.second;
          const std::string label0 =
              zero_mode ? "trivial character" : "Arf 0 (x " + c0.get_str() + ")";
          const std::string label1 = zero_mode ? "non-trivial (x " + c1.get_str() + ")"
                                               : "Arf 1 (x " + c1.get_str() + ")";
          out << "  " << std::setw(24) << std::left << "index" << std::setw(12) << "dim"
              << "dim'\n";
          out << "  " << std::setw(24) << std::left << label0 << std::setw(12)
              << t.dims.first.get_str() << t.dims_twisted.first.get_str() << "\n";
          out << "  " << std::setw(24) << std::left << label1 << std::setw(12)
              << t.dims.second.get_str() << t.dims_twisted.second.get_str() << "\n";
          const auto reassembly = [&](const Integer& total, const std::pair<Integer, Integer>& p) {
            if (zero_mode)
              return total.get_str() + " = " + p.first.get_str() + " + " + others.get_str() + "*" +
                     p.second.get_str();
            return total.get_str() + " = " + c0.get_str() + "*" + p.first.get_str() + " + " +
                   c1.get_str() + "*" + p.second.get_str();
          };
          out << "  check: " << reassembly(verlinde_dim(t.genus, t.level), t.dims) << "; "
              << reassembly(verlinde_dim_twisted(t.genus, t.level), t.dims_twisted) << "\n";
        }
      }
      break;
    }
    case Format::csv: {
      out << "genus,level,mode,index,dim,dim_twisted\n";
      for (const auto& row : rows) {
        const BrickTable& t = row.table;
        if (t.mode == BrickMode::odd) {
          out << t.genus << "," << t.level << ",odd,"
              << (t.odd_conjugate ? "level1-conjugate" : "level1") << ","
              << t.odd_multiplicity.get_str() << ",0\n";
        } else {
          const char* i0 = t.mode == BrickMode::mod4_zero ? "trivial" : "arf0";
          const char* i1 = t.mode == BrickMode::mod4_zero ? "nontrivial" : "arf1";
          out << t.genus << "," << t.level << "," << mode_name(t.mode) << "," << i0 << ","
              << t.dims.first.get_str() << "," << t.dims_twisted.first.get_str() << "\n";
          out << t.genus << "," << t.level << "," << mode_name(t.mode) << "," << i1 << ","
              << t.dims.second.get_str() << "," << t.dims_twisted.second.get_str() << "\n";
        }
      }
      break;
    }
    case Format::json: {
      json doc;
      doc["meta"] = meta_object(cfg);
      doc["rows"] = json::array();
      for (const auto& row : rows) {
        const BrickTable& t = row.table;
        json r{{"genus", t.genus}, {"level", t.level}, {"mode", mode_name(t.mode)}};
        if (t.mode == BrickMode::odd) {
          r["multiplicity"] = t.odd_multiplicity.get_str();
          r["conjugate"] = t.odd_conjugate;
        } else {
          r["brick0"] = t.dims.first.get_str();
          r["brick1"] = t.dims.second.get_str();
          r["brick0_twisted"] = t.dims_twisted.first.get_str();
          r["brick1_twisted"] = t.dims_twisted.second.get_str();
        }
        doc["rows"].push_back(std::move(r));
      }
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return kExitOk;
}

}  // namespace vbrick::cli
