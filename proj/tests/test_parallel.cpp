#include "qcx/parallel.hpp"

#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <string>

using namespace qcx;

TEST_CASE("ordered_map keeps index order for any worker count") {
    for (int w : {1, 3, 8}) {
        set_worker_count(w);
        if (parallel_enabled()) CHECK(worker_count() == w);
        const auto v = ordered_map<long>(1000, [](std::size_t i) { return static_cast<long>(i * i); });
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<long>(i * i));
    }
    set_worker_count(0);
    CHECK(worker_count() >= 1);
}

TEST_CASE("every index runs exactly once") {
    set_worker_count(4);
    std::vector<std::atomic<int>> hits(257);
    parallel_for_ordered(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (auto& h : hits) CHECK(h.load() == 1);
    set_worker_count(0);
}

TEST_CASE("the lowest failing index wins") {
    for (int w : {1, 8}) {
        set_worker_count(w);
        try {
            parallel_for_ordered(100, [](std::size_t i) {
                if (i == 17 || i == 60 || i == 99) throw std::runtime_error(std::to_string(i));
            });
            FAIL("expected an exception");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == "17");
        }
    }
    set_worker_count(0);
}

TEST_CASE("serial_for runs in order on the caller") {
    std::vector<std::size_t> seen;
    serial_for(10, [&](std::size_t i) { seen.push_back(i); });
    for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == i);
}

TEST_CASE("negative worker counts are rejected") { CHECK_THROWS_AS(set_worker_count(-1), std::invalid_argument); }
