#include "young/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace young {

namespace {

[[noreturn]] void bad_part(int index, const std::string& what) {
    std::ostringstream msg;
    msg << "invalid partition: parts[" << index << "] " << what;
    throw std::invalid_argument(msg.str());
}

void generate_descending(int remaining, int max_part, std::vector<int>& stack,
                         std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        stack.push_back(first);
        generate_descending(remaining - first, first, stack, out);
        stack.pop_back();
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) {
            std::ostringstream what;
            what << "= " << parts_[k] << " is not positive";
            bad_part(static_cast<int>(k) + 1, what.str());
        }
        if (k > 0 && parts_[k] > parts_[k - 1]) {
            std::ostringstream what;
            what << "= " << parts_[k] << " exceeds parts[" << k << "] = "
                 << parts_[k - 1] << "; parts must be weakly decreasing";
            bad_part(static_cast<int>(k) + 1, what.str());
        }
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("invalid partition text: bad part '" +
                                        std::string(token) + "'");
        }
        parts.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
        if (pos == text.size()) {
            throw std::invalid_argument("invalid partition text: trailing comma");
        }
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("row index must be >= 1");
    if (i > row_count()) return 0;
    return parts_[static_cast<std::size_t>(i) - 1];
}

int Partition::col_height(int j) const {
    if (j < 1) throw std::out_of_range("column index must be >= 1");
    // Parts are weakly decreasing, so rows with lambda_i >= j form a prefix.
    auto first_short = std::partition_point(
        parts_.begin(), parts_.end(), [j](int part) { return part >= j; });
    return static_cast<int>(first_short - parts_.begin());
}

int Partition::cell_count() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(BoxCoord b) const {
    return b.row >= 1 && b.col >= 1 && b.row <= row_count() && b.col <= part(b.row);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(static_cast<std::size_t>(parts_[0]));
        for (int j = 1; j <= parts_[0]; ++j) {
            conj[static_cast<std::size_t>(j) - 1] = col_height(j);
        }
    }
    return Partition(std::move(conj));
}

int Partition::durfee() const {
    int n = 0;
    while (n < row_count() && parts_[static_cast<std::size_t>(n)] >= n + 1) ++n;
    return n;
}

Partition Partition::truncate(int drop_rows, int drop_cols) const {
    if (drop_rows < 0 || drop_cols < 0) {
        throw std::invalid_argument("truncate: drop counts must be >= 0");
    }
    if (drop_rows > row_count()) {
        throw std::invalid_argument("truncate: cannot drop more rows than the partition has");
    }
    std::vector<int> rest;
    for (int i = drop_rows + 1; i <= row_count(); ++i) {
        int reduced = part(i) - drop_cols;
        if (reduced > 0) rest.push_back(reduced);
    }
    return Partition(std::move(rest));
}

std::string Partition::to_text() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k > 0) out << ',';
        out << parts_[k];
    }
    return out.str();
}

std::vector<Partition> enumerate_partitions(int max_cells) {
    if (max_cells < 0) throw std::invalid_argument("max_cells must be >= 0");
    std::vector<Partition> out;
    std::vector<int> stack;
    for (int n = 0; n <= max_cells; ++n) {
        generate_descending(n, n, stack, out);
    }
    return out;
}

}  // namespace young
