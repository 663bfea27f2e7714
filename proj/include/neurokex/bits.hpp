#ifndef NEUROKEX_BITS_HPP
#define NEUROKEX_BITS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace neurokex {

// Append-only bit string, MSB-first within each byte.
class Bits {
  public:
    Bits() = default;

    void push_back(bool bit)
    {
        const std::size_t byte = size_ / 8;
        if (byte == bytes_.size())
            bytes_.push_back(0);
        if (bit)
            bytes_[byte] |= static_cast<std::uint8_t>(0x80u >> (size_ % 8));
        ++size_;
    }

    // value's low `count` bits, most significant first
    void append_uint(std::uint64_t value, int count)
    {
        for (int i = count - 1; i >= 0; --i)
            push_back(((value >> i) & 1u) != 0);
    }

    void append(const Bits& other)
    {
        for (std::size_t i = 0; i < other.size_; ++i)
            push_back(other[i]);
    }

    bool operator[](std::size_t i) const
    {
        return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    void truncate(std::size_t nbits)
    {
        if (nbits >= size_)
            return;
        size_ = nbits;
        bytes_.resize((size_ + 7) / 8);
        const unsigned rem = size_ % 8;
        if (rem != 0)
            bytes_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - rem));
    }

    std::span<const std::uint8_t> bytes() const { return bytes_; }

    std::string to_hex() const
    {
        static const char digits[] = "0123456789abcdef";
        std::string out;
        const std::size_t nibbles = (size_ + 3) / 4;
        out.reserve(nibbles);
        for (std::size_t i = 0; i < nibbles; ++i) {
            const std::uint8_t byte = bytes_[i / 2];
            out.push_back(digits[(i % 2 == 0) ? (byte >> 4) : (byte & 0xF)]);
        }
        return out;
    }

    std::size_t count_ones() const
    {
        std::size_t n = 0;
        for (std::size_t i = 0; i < size_; ++i)
            if ((*this)[i])
                ++n;
        return n;
    }

    friend bool operator==(const Bits& a, const Bits& b)
    {
        return a.size_ == b.size_ && a.bytes_ == b.bytes_;
    }

  private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

} // namespace neurokex

#endif // NEUROKEX_BITS_HPP
