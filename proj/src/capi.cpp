#include "grassfold.h"

#include <cstring>
#include <string>

#include "json_io.hpp"
#include "verify.hpp"

using namespace grassfold;

struct gf_seed {
    Seed seed;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return GF_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GF_ERROR_INTERNAL;
    }
}

ScheduleVariant to_variant(int v) {
    if (v == GF_SCHEDULE_LITERAL) return ScheduleVariant::Literal;
    if (v != GF_SCHEDULE_UNIFORM) fail(ErrorCode::InvalidArgument, "unknown schedule variant");
    return ScheduleVariant::Uniform;
}

void require(bool cond, const char* what) {
    if (!cond) fail(ErrorCode::InvalidArgument, what);
}

} // namespace

extern "C" {

const char* gf_version(void) { return "1.0.0"; }

const char* gf_status_name(int status) {
    switch (status) {
        case GF_OK: return "ok";
        case GF_ERROR_INVALID_ARGUMENT: return "invalid_argument";
        case GF_ERROR_INVALID_MUTATION: return "invalid_mutation";
        case GF_ERROR_INCOMPARABLE: return "incomparable";
        case GF_ERROR_NOT_A_FACTOR: return "not_a_factor";
        case GF_ERROR_EVALUATION: return "evaluation";
        case GF_ERROR_STRUCTURE: return "structure";
        case GF_ERROR_SAMPLING: return "sampling";
        case GF_ERROR_PARSE: return "parse";
        case GF_ERROR_IO: return "io";
        default: return "internal";
    }
}

const char* gf_last_error(void) { return g_last_error.c_str(); }

void gf_string_free(char* s) { std::free(s); }

void gf_seed_free(gf_seed_t* seed) { delete seed; }

int gf_seed_initial(int k, int n, gf_seed_t** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = new gf_seed{initial_seed(k, n)};
    });
}

int gf_seed_foldable(int k, int n, int variant, gf_seed_t** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = new gf_seed{foldable_seed(k, n, to_variant(variant))};
    });
}

int gf_seed_from_json(const char* json, gf_seed_t** out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        Json j = Json::parse(json, nullptr, false);
        if (j.is_discarded()) fail(ErrorCode::Parse, "malformed JSON");
        *out = new gf_seed{seed_from_json(j)};
    });
}

int gf_seed_clone(const gf_seed_t* seed, gf_seed_t** out) {
    return guarded([&] {
        require(seed != nullptr && out != nullptr, "null argument");
        *out = new gf_seed{seed->seed};
    });
}

int gf_seed_k(const gf_seed_t* seed) { return seed ? seed->seed.k() : 0; }
int gf_seed_n(const gf_seed_t* seed) { return seed ? seed->seed.n() : 0; }

int gf_seed_vertex_id(const gf_seed_t* seed, int row, int col, int* out_id) {
    return guarded([&] {
        require(seed != nullptr && out_id != nullptr, "null argument");
        *out_id = grid_vertex_id(row, col, seed->seed.k(), seed->seed.n());
    });
}

int gf_seed_to_json(const gf_seed_t* seed, char** out_json) {
    return guarded([&] {
        require(seed != nullptr && out_json != nullptr, "null argument");
        *out_json = dup_string(seed_to_json(seed->seed).dump(2));
    });
}

int gf_seed_to_dot(const gf_seed_t* seed, char** out_dot) {
    return guarded([&] {
        require(seed != nullptr && out_dot != nullptr, "null argument");
        *out_dot = dup_string(seed_to_dot(seed->seed));
    });
}

int gf_seed_mutate(gf_seed_t* seed, int vertex_id, char** out_record_json) {
    return guarded([&] {
        require(seed != nullptr, "null seed");
        auto [next, rec] = mutate_seed(seed->seed, vertex_id);
        seed->seed = std::move(next);
        if (out_record_json) *out_record_json = dup_string(record_to_json(rec).dump(2));
    });
}

int gf_seed_apply_sequence(gf_seed_t* seed, const int* ids, size_t count,
                           char** out_trace_json) {
    return guarded([&] {
        require(seed != nullptr && (ids != nullptr || count == 0), "null argument");
        std::vector<int> vs(ids, ids + count);
        auto [next, trace] = apply_sequence(seed->seed, vs);
        seed->seed = std::move(next);
        if (out_trace_json) {
            Json jt = Json::array();
            for (const auto& rec : trace) jt.push_back(record_to_json(rec));
            *out_trace_json = dup_string(jt.dump(2));
        }
    });
}

int gf_fold_schedule(int k, int n, int variant, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        *out_json = dup_string(schedule_to_json(fold_schedule(k, n, to_variant(variant))).dump(2));
    });
}

int gf_fold(int k, int n, int variant, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        *out_json = dup_string(fold_report(k, n, to_variant(variant)).dump(2));
    });
}

int gf_verify_seed(int k, int n, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        *out_json = dup_string(verify_seed_report(k, n).dump(2));
    });
}

int gf_verify_exchange(int k, int n, int variant, int trials, uint64_t rng_seed,
                       char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        *out_json = dup_string(
            verify_exchange_report(k, n, to_variant(variant), trials, rng_seed).dump(2));
    });
}

int gf_verify_kinematics(int n, int dim, int trials, double tol, uint64_t rng_seed,
                         char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null argument");
        kin::ResidualReport rep;
        if (dim == 3)
            rep = kin::run_d3_suite(n, trials, tol, rng_seed);
        else if (dim == 4)
            rep = kin::run_d4_control(n, trials, tol, rng_seed);
        else
            fail(ErrorCode::InvalidArgument, "dim must be 3 or 4");
        *out_json = dup_string(kinematics_report_to_json(rep).dump(2));
    });
}

} // extern "C"
