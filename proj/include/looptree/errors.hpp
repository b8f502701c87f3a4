#pragma once

#include <stdexcept>
#include <string>

namespace looptree {

// Error taxonomy used for CLI exit codes and machine-readable categories:
// input-side problems (parse/geometry/topology/config/io/domain) vs
// numerical failures (compatibility/convergence/numerical).
enum class errc {
    io,
    parse,
    geometry,
    topology,
    config,
    domain,
    compatibility,
    convergence,
    numerical,
};

const char* category_name(errc c);

class solver_error : public std::runtime_error {
public:
    solver_error(errc code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }
    const char* category() const { return category_name(code_); }

private:
    errc code_;
};

#define LOOPTREE_DEFINE_ERROR(name, code)                      \
    struct name : solver_error {                               \
        explicit name(const std::string& msg)                  \
            : solver_error(code, msg) {}                       \
    }

LOOPTREE_DEFINE_ERROR(io_error, errc::io);
LOOPTREE_DEFINE_ERROR(parse_error, errc::parse);
LOOPTREE_DEFINE_ERROR(geometry_error, errc::geometry);
LOOPTREE_DEFINE_ERROR(topology_error, errc::topology);
LOOPTREE_DEFINE_ERROR(config_error, errc::config);
LOOPTREE_DEFINE_ERROR(domain_error, errc::domain);
LOOPTREE_DEFINE_ERROR(compatibility_error, errc::compatibility);
LOOPTREE_DEFINE_ERROR(convergence_error, errc::convergence);
LOOPTREE_DEFINE_ERROR(numerical_error, errc::numerical);

#undef LOOPTREE_DEFINE_ERROR

inline const char* category_name(errc c) {
    switch (c) {
        case errc::io: return "io";
        case errc::parse: return "parse";
        case errc::geometry: return "geometry";
        case errc::topology: return "topology";
        case errc::config: return "config";
        case errc::domain: return "domain";
        case errc::compatibility: return "compatibility";
        case errc::convergence: return "convergence";
        case errc::numerical: return "numerical";
    }
    return "unknown";
}

// Exit-code mapping: 0 success, 1 usage, 2 input error, 3 numerical failure.
inline int exit_code_for(errc c) {
    switch (c) {
        case errc::compatibility:
        case errc::convergence:
        case errc::numerical:
            return 3;
        default:
            return 2;
    }
}

}  // namespace looptree
