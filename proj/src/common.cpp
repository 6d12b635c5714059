#include "cupcube/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace cupcube {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

static unsigned thread_cap() {
    const char* env = std::getenv("CUPCUBE_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v <= 1) return 1;
    return unsigned(std::min<long>(v, 64));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned nthreads = std::min<std::size_t>(thread_cap(), count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += nthreads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cupcube
