#ifndef RVC_REPRODUCE_HPP
#define RVC_REPRODUCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rvc {

// One line of a reproduction table: a predicted value next to what the
// machinery actually established, with the evidence kind and the closed form
// being checked. evidence is "solver-exact" for values proved by search,
// "construction-verified" for explicit colourings checked by the verifier,
// and "stated-only" for recorded facts that are not re-derived here.
struct TableRow {
    std::string family;
    std::string params;
    std::string parameter;
    std::string predicted;
    std::string solver;
    std::string evidence;
    bool agree = false;
    long long ms = 0;
    std::string citation;
};

struct ReproduceOptions {
    int threads = 1;
    std::uint64_t seed = 1;
    double time_limit = 0.0;  // seconds per solver call, 0 for unlimited
};

const std::vector<std::string>& reproduce_tags();

// Runs the reproduction suite named by tag and returns its rows. Throws
// std::invalid_argument for an unknown tag.
std::vector<TableRow> reproduce(const std::string& tag, const ReproduceOptions& opts);

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

}  // namespace rvc

#endif
