#pragma once

#include <cstdio>
#include <cstring>
#include <fstream>
#include <streambuf>
#include <string>

namespace typeqa::testing {

// VmRSS / VmHWM in bytes from /proc/self/status; 0 when unavailable.
inline long long proc_status_bytes(const char* key) {
    std::ifstream in("/proc/self/status");
    std::string line;
    const std::size_t key_len = std::strlen(key);
    while (std::getline(in, line)) {
        if (line.compare(0, key_len, key) != 0) continue;
        long long kb = 0;
        std::sscanf(line.c_str() + key_len, ":%lld", &kb);
        return kb * 1024;
    }
    return 0;
}

// Synthesizes record lines on the fly so huge inputs never exist in memory.
class GeneratedLines : public std::streambuf {
public:
    using LineMaker = std::string (*)(std::size_t);

    GeneratedLines(std::size_t n, LineMaker make) : n_(n), make_(make) {}

    std::size_t bytes_produced() const { return bytes_; }

protected:
    int underflow() override {
        if (i_ >= n_) return traits_type::eof();
        line_ = make_(i_++);
        line_ += '\n';
        bytes_ += line_.size();
        setg(line_.data(), line_.data(), line_.data() + line_.size());
        return traits_type::to_int_type(line_[0]);
    }

private:
    std::string line_;
    std::size_t i_ = 0;
    std::size_t n_;
    std::size_t bytes_ = 0;
    LineMaker make_;
};

}  // namespace typeqa::testing
