#include "socialist/serialize.hpp"

#include <cmath>

#include "socialist/errors.hpp"

namespace socialist {

namespace {

Json optional_number(const std::optional<u64>& v) { return v ? Json(*v) : Json(nullptr); }

// JSON has no infinities; an empty prime sum has ln = -inf.
Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json counters_json(const SearchCounters& c) {
    return Json{{"primes_seen", c.primes_seen}, {"rs_passed", c.rs_passed}, {"t_passed", c.t_passed},
                {"eliminated", c.eliminated},   {"candidates", c.candidates}, {"capped", c.capped}};
}

Json rejected_json(const RejectionCounts& r) {
    return Json{{"mod8", r.mod8}, {"legendre_5", r.legendre_5}, {"legendre_m23", r.legendre_m23},
                {"t", r.t},       {"qf", r.qf},                 {"lfc", r.lfc}};
}

Json survivors_json(const std::vector<PrimeRecord>& survivors) {
    Json out = Json::array();
    for (const auto& s : survivors) out.push_back(to_json(s));
    return out;
}

}  // namespace

Json to_json(const ConditionReport& r) {
    return Json{{"p", r.p},
                {"passes_mod8", r.passes_mod8},
                {"legendre_5", r.legendre_5},
                {"legendre_m23", r.legendre_m23},
                {"legendre_1957", r.legendre_1957},
                {"cubic_roots", r.cubic_roots},
                {"legendre_4y25", r.legendre_4y25},
                {"rs_pass", r.rs_pass},
                {"t_pass", r.t_pass}};
}

Json to_json(const SocialistVerdict& v) {
    Json duplicate = nullptr;
    if (v.duplicate) duplicate = Json{{"i", v.duplicate->i}, {"j", v.duplicate->j}};
    return Json{{"p", v.p},
                {"is_socialist", v.is_socialist},
                {"duplicate", duplicate},
                {"missing_residue", optional_number(v.missing_residue)},
                {"res_r_consistent", v.res_r_consistent ? Json(*v.res_r_consistent) : Json(nullptr)}};
}

Json to_json(const HeuristicEstimate& e) {
    Json out{{"kind", std::string(to_string(e.kind))}, {"argument", e.argument}};
    if (e.kind == EstimateKind::IntervalSum) out["argument_hi"] = e.argument_hi;
    out["ln_value"] = finite_or_null(e.ln_value);
    out["log10_value"] = finite_or_null(e.log10_value);
    return out;
}

Json to_json(const ResidueRecord& r) { return Json{{"p", r.p}, {"r_p", r.r_p}}; }

Json to_json(const ResidueRecord& r, std::span<const GeneralizedResidue> generalized) {
    Json out = to_json(r);
    Json list = Json::array();
    for (const auto& g : generalized) list.push_back(Json{{"k", g.k}, {"value", g.value}});
    out["generalized"] = std::move(list);
    return out;
}

Json to_json(const PrimeRecord& r) {
    Json out{{"p", r.p}, {"status", r.status}, {"iterations", r.iterations}};
    if (r.witness) out["witness"] = Json{{"i", r.witness->i}, {"j", r.witness->j}, {"value", r.witness->value}};
    return out;
}

Json to_json(const SearchReport& r) {
    return Json{{"summary", true},
                {"range", Json::array({r.range.lo, r.range.hi})},
                {"filters", r.filters},
                {"counters", counters_json(r.counters)},
                {"rejected", rejected_json(r.rejected)},
                {"iterations",
                 Json{{"scanned", r.iterations.scanned},
                      {"mean", r.iterations.mean()},
                      {"max", r.iterations.max},
                      {"mean_ratio", r.iterations.mean_ratio()}}},
                {"survivors", survivors_json(r.survivors)},
                {"chunks_completed", r.chunks_completed},
                {"complete", r.complete}};
}

Json to_json(const SearchCheckpoint& c) {
    Json chunks = Json::array();
    for (const auto& ch : c.completed_chunks) chunks.push_back(Json::array({ch.lo, ch.hi}));
    return Json{{"config_digest", c.config_digest},
                {"completed_chunks", std::move(chunks)},
                {"counters", counters_json(c.counters)},
                {"rejected", rejected_json(c.rejected)},
                {"iterations",
                 Json{{"scanned", c.iterations.scanned},
                      {"total", c.iterations.total},
                      {"max", c.iterations.max},
                      {"ratio_sum", c.iterations.ratio_sum}}},
                {"survivors", survivors_json(c.survivors)},
                {"output_bytes", c.output_bytes}};
}

SearchCheckpoint checkpoint_from_json(const Json& j) {
    try {
        SearchCheckpoint c;
        c.config_digest = j.at("config_digest").get<std::string>();
        for (const auto& ch : j.at("completed_chunks")) {
            if (!ch.is_array() || ch.size() != 2) throw std::runtime_error("chunk entry is not a pair");
            c.completed_chunks.push_back({ch.at(0).get<u64>(), ch.at(1).get<u64>()});
        }
        const auto& k = j.at("counters");
        c.counters = {k.at("primes_seen").get<u64>(), k.at("rs_passed").get<u64>(), k.at("t_passed").get<u64>(),
                      k.at("eliminated").get<u64>(),  k.at("candidates").get<u64>(), k.at("capped").get<u64>()};
        const auto& r = j.at("rejected");
        c.rejected = {r.at("mod8").get<u64>(), r.at("legendre_5").get<u64>(), r.at("legendre_m23").get<u64>(),
                      r.at("t").get<u64>(),    r.at("qf").get<u64>(),         r.at("lfc").get<u64>()};
        const auto& it = j.at("iterations");
        c.iterations = {it.at("scanned").get<u64>(), it.at("total").get<u64>(), it.at("max").get<u64>(),
                        it.at("ratio_sum").get<double>()};
        for (const auto& s : j.at("survivors")) {
            PrimeRecord rec;
            rec.p = s.at("p").get<u64>();
            rec.status = s.at("status").get<std::string>();
            rec.iterations = s.at("iterations").get<u64>();
            if (s.contains("witness")) {
                const auto& w = s.at("witness");
                rec.witness = Witness{w.at("i").get<u64>(), w.at("j").get<u64>(), w.at("value").get<u64>()};
            }
            c.survivors.push_back(std::move(rec));
        }
        c.output_bytes = j.at("output_bytes").get<u64>();
        return c;
    } catch (const CheckpointError&) {
        throw;
    } catch (const std::exception& e) {
        throw CheckpointError(CheckpointError::Kind::Corrupt, std::string("checkpoint is corrupt: ") + e.what());
    }
}

std::string dump_line(const Json& json) { return json.dump(); }

}  // namespace socialist
