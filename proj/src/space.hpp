#pragma once

#include <cstddef>

namespace streamis {

// Counts retained stream items (balls/vertices/edges). Sketch registers that
// are not stream items go through the separate register counter and are
// reported alongside, never mixed into peak_items.
class SpaceAccount {
public:
    void add(std::size_t k = 1) {
        current_ += k;
        if (current_ > peak_) peak_ = current_;
    }
    void remove(std::size_t k = 1) { current_ = k > current_ ? 0 : current_ - k; }

    void registers_add(std::size_t k = 1) {
        registers_ += k;
        if (registers_ > peak_registers_) peak_registers_ = registers_;
    }
    void registers_remove(std::size_t k = 1) { registers_ = k > registers_ ? 0 : registers_ - k; }

    std::size_t current_items() const { return current_; }
    std::size_t peak_items() const { return peak_; }
    std::size_t registers() const { return registers_; }
    std::size_t peak_registers() const { return peak_registers_; }

private:
    std::size_t current_ = 0;
    std::size_t peak_ = 0;
    std::size_t registers_ = 0;
    std::size_t peak_registers_ = 0;
};

}  // namespace streamis
