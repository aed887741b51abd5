#pragma once
// serialize.hpp - JSON and CSV emitters for the report types, the FNV-1a
// output digest, and the run manifest appended by the CLI. Key order is
// fixed so that parse -> dump round-trips byte-identically; integers beyond
// 2^53 become decimal strings so consumers cannot lose precision.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gaplab/effective.hpp"
#include "gaplab/reduction.hpp"
#include "gaplab/reports.hpp"
#include "gaplab/theorem1.hpp"

namespace gaplab {

using ordered_json = nlohmann::ordered_json;

inline ordered_json json_int(const Int& v) {
  static const Int kExactDoubleMax = pow2_int(53);
  if (abs(v) <= kExactDoubleMax) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

inline ordered_json json_rat(const Rat& q) {
  return ordered_json(q.get_num().get_str() + "/" + q.get_den().get_str());
}

inline ordered_json json_logreal(const LogReal& x) {
  ordered_json j;
  j["sign"] = x.sign;
  if (x.sign == 0)
    j["log10_magnitude"] = nullptr;
  else
    j["log10_magnitude"] = x.log10_magnitude();
  return j;
}

inline ordered_json to_json(const DivisibilityHit& hit) {
  ordered_json j;
  j["a"] = json_int(hit.a);
  j["b"] = json_int(hit.b);
  j["t"] = json_int(hit.t);
  return j;
}

inline ordered_json to_json(const std::vector<DivisibilityHit>& hits) {
  ordered_json arr = ordered_json::array();
  for (const DivisibilityHit& hit : hits) arr.push_back(to_json(hit));
  return arr;
}

inline ordered_json pairs_to_json(const std::vector<std::pair<Int, Int>>& pairs) {
  ordered_json arr = ordered_json::array();
  for (const auto& [a, b] : pairs) arr.push_back(ordered_json::array({json_int(a), json_int(b)}));
  return arr;
}

inline ordered_json to_json(const CubicReduction& r) {
  ordered_json j;
  j["family"] = "cubic";
  j["a"] = json_int(r.a);
  j["b"] = json_int(r.b);
  j["l"] = r.l;
  j["t"] = json_int(r.t);
  j["x"] = json_int(r.x);
  j["y"] = json_int(r.y);
  j["D"] = json_int(r.D);
  j["u"] = json_int(r.u);
  j["v"] = json_int(r.v);
  j["s"] = json_int(r.s);
  j["s_sign"] = r.s_sign;
  j["dioph_integer_ok"] = r.dioph_integer_ok;
  j["dioph_divided_ok"] = r.dioph_divided_ok;
  return j;
}

inline ordered_json to_json(const DivisorChainReport& rep) {
  ordered_json j;
  j["u"] = json_int(rep.u);
  j["v"] = json_int(rep.v);
  j["t"] = json_int(rep.t);
  j["l"] = rep.l;
  j["s"] = json_int(rep.s);
  j["u3_coprime"] = rep.u3_coprime;
  ordered_json links = ordered_json::array();
  for (const DivisorChainLink& link : rep.links) {
    ordered_json lj;
    lj["divisor"] = link.divisor_expr;
    lj["value"] = json_int(link.divisor_value);
    lj["gcd_with_residual"] = json_int(link.gcd_with_residual);
    lj["s_divides"] = link.s_divides;
    links.push_back(std::move(lj));
  }
  j["links"] = std::move(links);
  j["all_ok"] = rep.all_ok();
  return j;
}

inline ordered_json to_json(const QuarticReduction& r) {
  ordered_json j;
  j["family"] = "quartic";
  j["a"] = json_int(r.a);
  j["b"] = json_int(r.b);
  j["l"] = r.l;
  j["t"] = json_int(r.t);
  j["D"] = json_int(r.D);
  j["x"] = json_int(r.x);
  j["y"] = json_int(r.y);
  j["s"] = json_int(r.s);
  j["s_sign"] = r.s_sign;
  j["above_threshold"] = r.above_threshold;
  j["size_y"] = size_status_name(r.size_y);
  j["size_D"] = size_status_name(r.size_D);
  j["root_gap"] = size_status_name(r.root_gap);
  return j;
}

inline ordered_json to_json(const Theorem1Report& rep) {
  ordered_json j;
  ordered_json cases = ordered_json::array();
  for (const SmallUCase& cs : rep.small_u_cases) {
    ordered_json cj;
    cj["u"] = cs.u;
    cj["scan_limit"] = cs.scan_limit;
    ordered_json cands = ordered_json::array();
    for (const SmallUCandidate& cand : cs.candidates) {
      ordered_json kj;
      kj["v"] = json_int(cand.v);
      kj["D"] = json_int(cand.D);
      kj["a"] = json_int(cand.a);
      kj["b"] = json_int(cand.b);
      kj["degenerate"] = cand.degenerate;
      cands.push_back(std::move(kj));
    }
    cj["candidates"] = std::move(cands);
    cj["exhausted"] = cs.exhausted;
    cases.push_back(std::move(cj));
  }
  j["small_u_cases"] = std::move(cases);
  j["bennett_u_max"] = rep.bennett_u_max;
  j["bennett_u_max_recomputed"] = rep.bennett_u_max_recomputed;
  ordered_json table = ordered_json::array();
  for (const Theorem1Row& row : rep.check_table) {
    ordered_json rj;
    rj["u"] = row.u;
    rj["v"] = json_int(row.v);
    rj["bennett_bound"] = json_rat(row.bennett_bound);
    rj["value"] = mpq_get_d(row.value_lo.get_mpq_t());
    rj["exceeds_five"] = row.exceeds_five;
    table.push_back(std::move(rj));
  }
  j["check_table"] = std::move(table);
  j["min_value"] = mpq_get_d(rep.min_value.get_mpq_t());
  j["min_value_u"] = rep.min_value_u;
  j["solutions"] = pairs_to_json(rep.solutions);
  return j;
}

inline ordered_json to_json(const FieldBounds& fb) {
  ordered_json j;
  j["degree"] = fb.degree;
  j["m"] = json_int(fb.m);
  j["m_reduced"] = json_int(fb.m_reduced);
  j["disc_bound"] = json_int(fb.disc_bound);
  ordered_json cands = ordered_json::array();
  for (const Int& d : fb.disc_candidates) cands.push_back(json_int(d));
  j["disc_candidates"] = std::move(cands);
  j["reg_bound"] = fb.reg_bound;
  j["reg_bound_derived"] = fb.reg_bound_derived;
  return j;
}

inline ordered_json to_json(const EffectiveMeasure& em) {
  ordered_json j;
  j["degree"] = em.degree;
  j["m"] = json_int(em.m);
  j["height_bound"] = em.height_bound;
  j["regulator_bound"] = em.regulator_bound;
  j["c_log"] = json_logreal(em.c_log);
  j["tau"] = json_logreal(em.tau);
  j["chain_inequality_ok"] = em.chain_inequality_ok;
  return j;
}

inline ordered_json to_json(const CutoffChain& c) {
  ordered_json j;
  j["degree"] = c.degree;
  j["t"] = json_int(c.t);
  j["l"] = c.l;
  j["raw_denom_exponent"] = c.raw_denom_exponent;
  j["raw_log_max"] = c.raw_log_max;
  if (c.intermediate_log_max)
    j["intermediate_log_max"] = *c.intermediate_log_max;
  else
    j["intermediate_log_max"] = nullptr;
  j["log_max"] = c.log_max;
  return j;
}

inline ordered_json to_json(const GapReport& rep) {
  ordered_json j;
  ordered_json rows = ordered_json::array();
  for (const GapRow& row : rep.rows) {
    ordered_json rj;
    rj["a"] = json_int(row.hit.a);
    rj["b"] = json_int(row.hit.b);
    rj["t"] = json_int(row.hit.t);
    rj["ratio"] = row.ratio;
    rj["invariants_ok"] = row.invariants_ok;
    if (row.formula_bound)
      rj["formula_bound"] = *row.formula_bound;
    else
      rj["formula_bound"] = nullptr;
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  ordered_json buckets = ordered_json::array();
  for (const GapBucket& bucket : rep.buckets) {
    ordered_json bj;
    bj["a_lo"] = json_int(bucket.a_lo);
    bj["a_hi"] = json_int(bucket.a_hi);
    bj["hits"] = bucket.hits;
    bj["min_ratio"] = bucket.min_ratio;
    buckets.push_back(std::move(bj));
  }
  j["buckets"] = std::move(buckets);
  j["violations"] = rep.violations;
  return j;
}

inline ordered_json to_json(const AbcTriple& row) {
  ordered_json j;
  j["hit"] = to_json(row.hit);
  j["x"] = json_int(row.x);
  j["y"] = json_int(row.y);
  j["s"] = json_int(row.s);
  j["d"] = json_int(row.d_common);
  j["A"] = json_int(row.a);
  j["B"] = json_int(row.b);
  j["C"] = json_int(row.c);
  j["radical"] = json_int(row.rad);
  j["quality"] = row.quality;
  return j;
}

inline ordered_json to_json(const std::vector<AbcTriple>& rows) {
  ordered_json arr = ordered_json::array();
  for (const AbcTriple& row : rows) arr.push_back(to_json(row));
  return arr;
}

// --- CSV ---------------------------------------------------------------

namespace detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string csv_cell(const ordered_json& v) {
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_null()) return "";
  if (v.is_structured()) return csv_escape(v.dump());
  return v.dump();
}

}  // namespace detail

// Arrays of objects become header + rows; arrays of arrays become rows;
// objects become key,value lines. Nested values are embedded as JSON text.
inline std::string to_csv(const ordered_json& j) {
  std::string out;
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    bool first = true;
    for (auto it = j.front().begin(); it != j.front().end(); ++it) {
      if (!first) out += ',';
      out += detail::csv_escape(it.key());
      first = false;
    }
    out += '\n';
    for (const ordered_json& row : j) {
      first = true;
      for (auto it = row.begin(); it != row.end(); ++it) {
        if (!first) out += ',';
        out += detail::csv_cell(it.value());
        first = false;
      }
      out += '\n';
    }
    return out;
  }
  if (j.is_array()) {
    for (const ordered_json& row : j) {
      if (row.is_array()) {
        bool first = true;
        for (const ordered_json& cell : row) {
          if (!first) out += ',';
          out += detail::csv_cell(cell);
          first = false;
        }
      } else {
        out += detail::csv_cell(row);
      }
      out += '\n';
    }
    return out;
  }
  if (j.is_object()) {
    out += "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      out += detail::csv_escape(it.key());
      out += ',';
      out += detail::csv_cell(it.value());
      out += '\n';
    }
    return out;
  }
  out += detail::csv_cell(j);
  out += '\n';
  return out;
}

// --- digests and manifests ----------------------------------------------

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string digest_hex(std::string_view bytes) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out = "fnv1a64:";
  for (int i = 15; i >= 0; --i) out += hex[(h >> (4 * i)) & 0xf];
  return out;
}

struct RunManifest {
  std::string subcommand;
  ordered_json parameters;
  std::string version;
  double wall_ms = 0.0;
  std::string digest;
};

inline std::string manifest_line(const RunManifest& m) {
  ordered_json j;
  j["subcommand"] = m.subcommand;
  j["parameters"] = m.parameters;
  j["version"] = m.version;
  j["wall_ms"] = m.wall_ms;
  j["digest"] = m.digest;
  return j.dump() + "\n";
}

}  // namespace gaplab
