#include "typeqa/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>
#include <vector>

namespace typeqa {

void transform_lines_parallel(std::istream& in, std::ostream& out, std::size_t workers,
                              const std::function<std::string(const JsonlLine&)>& fn,
                              std::size_t batch_size) {
    if (workers == 0) workers = 1;
    if (batch_size == 0) batch_size = 1;

    JsonlReader reader(in);
    std::vector<JsonlLine> batch;
    std::vector<std::string> results;
    batch.reserve(batch_size);

    for (;;) {
        batch.clear();
        JsonlLine line;
        while (batch.size() < batch_size && reader.next(line)) batch.push_back(std::move(line));
        if (batch.empty()) break;

        results.assign(batch.size(), {});
        if (workers == 1 || batch.size() == 1) {
            for (std::size_t i = 0; i < batch.size(); ++i) results[i] = fn(batch[i]);
        } else {
            std::atomic<std::size_t> next_index{0};
            std::exception_ptr first_error;
            std::mutex error_mutex;
            auto run = [&] {
                for (;;) {
                    const std::size_t i = next_index.fetch_add(1);
                    if (i >= batch.size()) return;
                    try {
                        results[i] = fn(batch[i]);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                        return;
                    }
                }
            };
            std::vector<std::thread> pool;
            const std::size_t n_threads = std::min(workers, batch.size());
            pool.reserve(n_threads);
            for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(run);
            for (std::thread& t : pool) t.join();
            if (first_error) std::rethrow_exception(first_error);
        }
        for (const std::string& blob : results)
            if (!blob.empty()) out << blob;
    }
}

}  // namespace typeqa
