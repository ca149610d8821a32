#include "purecomp/util.hpp"

#include <atomic>
#include <exception>
#include <mutex>

namespace purecomp {

std::vector<std::pair<i64, int>> factorize64(i64 n) {
    n = abs64(n);
    if (n <= 1) return {};
    std::vector<std::pair<i64, int>> out;
    i64 steps = 0;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (++steps > 20'000'000) throw TooLargeError("factorization exceeds the trial-division budget");
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = std::min<std::size_t>(workers, n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace purecomp
