// One line per acceptance criterion; exit status is nonzero if any fails.
#include "wzw/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    int failed = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& r : wzw::run_acceptance(ids)) {
        const char* tag = r.status == wzw::Status::pass ? "PASS" : r.status == wzw::Status::xfail ? "XFAIL" : "FAIL";
        std::printf("%-5s %-3s %s [%zu cases]%s%s\n", tag, r.id.c_str(), r.title.c_str(), r.cases,
                    r.detail.empty() ? "" : " -- ", r.detail.c_str());
        std::fflush(stdout);
        if (r.status == wzw::Status::fail) ++failed;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d failing, %.1f s\n", failed, secs);
    return failed ? 1 : 0;
}
