#ifndef PAFP_STOPWATCH_HPP
#define PAFP_STOPWATCH_HPP

#include <chrono>

namespace pafp {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace pafp

#endif
