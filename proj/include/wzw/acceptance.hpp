#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wzw {

enum class Status { pass, fail, xfail };

std::string to_string(Status s);

struct CriterionReport {
    std::string id;  // "1" .. "11", with a letter suffix for split criteria
    std::string title;
    Status status = Status::fail;
    std::size_t cases = 0;
    std::string detail;
};

// Runs the acceptance criteria whose id (ignoring any letter suffix) is in
// `ids`, or all of them when `ids` is empty. Randomized point configurations
// are drawn from a generator seeded with `seed`. Reports come back in
// criterion order.
std::vector<CriterionReport> run_acceptance(const std::vector<int>& ids = {}, std::uint64_t seed = 20240229);

// Single criteria, usable from the CLI's verify subcommands.
CriterionReport verify_virasoro(int kmax, int degree);
CriterionReport verify_sugawara(int level, int mu, int degree);

}  // namespace wzw
