#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordlat {

using error = std::runtime_error;

/* Permutation of {0, ..., degree-1}, stored as the image vector.
 * Text form is 1-based disjoint cycle notation, e.g. "(1,2,3)(4,5)";
 * "()" is the identity. */
class Perm {
public:
    Perm() = default;
    explicit Perm(unsigned degree) : img_(degree) {
        for (unsigned i = 0; i < degree; ++i) img_[i] = static_cast<uint8_t>(i);
    }
    explicit Perm(std::vector<uint8_t> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (uint8_t v : img_) {
            if (v >= img_.size() || seen[v]) throw error("Perm: image vector is not a permutation");
            seen[v] = true;
        }
    }

    unsigned degree() const { return static_cast<unsigned>(img_.size()); }
    uint8_t operator()(uint8_t x) const { return img_[x]; }

    // Composition acts right-to-left: (a*b)(x) = a(b(x)).
    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.degree() != b.degree()) throw error("Perm: degree mismatch");
        Perm r;
        r.img_.resize(a.degree());
        for (unsigned x = 0; x < a.degree(); ++x) r.img_[x] = a.img_[b.img_[x]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(degree());
        for (unsigned x = 0; x < degree(); ++x) r.img_[img_[x]] = static_cast<uint8_t>(x);
        return r;
    }

    bool is_identity() const {
        for (unsigned x = 0; x < degree(); ++x)
            if (img_[x] != x) return false;
        return true;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    const std::vector<uint8_t>& images() const { return img_; }

    int sign() const {
        int s = 1;
        std::vector<bool> done(degree(), false);
        for (unsigned x = 0; x < degree(); ++x) {
            if (done[x]) continue;
            unsigned len = 0;
            for (unsigned y = x; !done[y]; y = img_[y]) {
                done[y] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    /* Canonical cycle string: cycles ordered by smallest moved point, each
     * cycle starting at its smallest point, fixed points omitted. */
    std::string str() const {
        std::string out;
        std::vector<bool> done(degree(), false);
        for (unsigned x = 0; x < degree(); ++x) {
            if (done[x] || img_[x] == x) {
                done[x] = true;
                continue;
            }
            out += '(';
            bool first = true;
            for (unsigned y = x; !done[y]; y = img_[y]) {
                done[y] = true;
                if (!first) out += ',';
                out += std::to_string(y + 1);
                first = false;
            }
            out += ')';
        }
        if (out.empty()) out = "()";
        return out;
    }

    /* Parses cycle notation with 1-based points; commas or spaces separate
     * points. The degree must be given since fixed top points are omitted. */
    static Perm parse(const std::string& text, unsigned degree) {
        std::vector<uint8_t> img(degree);
        for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<uint8_t>(i);
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        };
        skip_ws();
        bool any = false;
        while (i < text.size()) {
            skip_ws();
            if (i >= text.size()) break;
            if (text[i] != '(') throw error("Perm: expected '(' in \"" + text + "\"");
            ++i;
            std::vector<unsigned> cyc;
            while (true) {
                skip_ws();
                if (i < text.size() && text[i] == ')') {
                    ++i;
                    break;
                }
                unsigned v = 0;
                bool digits = false;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                    v = v * 10 + static_cast<unsigned>(text[i] - '0');
                    ++i;
                    digits = true;
                }
                if (!digits) throw error("Perm: expected point in \"" + text + "\"");
                if (v < 1 || v > degree) throw error("Perm: point out of range in \"" + text + "\"");
                cyc.push_back(v - 1);
                skip_ws();
                if (i < text.size() && text[i] == ',') ++i;
            }
            for (size_t k = 0; k < cyc.size(); ++k) {
                unsigned from = cyc[k], to = cyc[(k + 1) % cyc.size()];
                if (img[from] != from && cyc.size() > 1)
                    throw error("Perm: point repeated across cycles in \"" + text + "\"");
                if (cyc.size() > 1) img[from] = static_cast<uint8_t>(to);
            }
            any = true;
            skip_ws();
        }
        if (!any) throw error("Perm: empty permutation text");
        Perm p;
        p.img_ = std::move(img);
        // Re-validate: repeated points inside one cycle slip past the loop above.
        std::vector<bool> seen(degree, false);
        for (uint8_t v : p.img_) {
            if (seen[v]) throw error("Perm: not a permutation: \"" + text + "\"");
            seen[v] = true;
        }
        return p;
    }

private:
    std::vector<uint8_t> img_;
};

/* Splits "(1,2)(3,4), (1,3)" style generator lists into individual
 * permutation strings: top-level commas separate generators, commas inside
 * parentheses separate cycle points. */
inline std::vector<std::string> split_perm_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
            continue;
        }
        cur += c;
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

}  // namespace ordlat
