#include "signvec/signed_vector.hpp"

#include "signvec/errors.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace signvec {

int IndexSet::count_prefix(int p) const noexcept {
    if (p <= 0) return 0;
    p = std::min(p, kMaxDim);
    int c = 0;
    const int full = p >> 6;
    for (int i = 0; i < full; ++i) c += std::popcount(words_[i]);
    if (const int rest = p & 63; rest != 0)
        c += std::popcount(words_[full] & ((std::uint64_t{1} << rest) - 1));
    return c;
}

int IndexSet::max_element() const noexcept {
    for (int i = kWords - 1; i >= 0; --i)
        if (words_[i]) return i * 64 + 64 - std::countl_zero(words_[i]);
    return 0;
}

std::vector<int> IndexSet::to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < kWords; ++i) {
        auto w = words_[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w) + 1);
            w &= w - 1;
        }
    }
    return out;
}

IndexSet IndexSet::range(int n) noexcept {
    IndexSet s;
    for (int i = 0; i < kWords && n > 0; ++i, n -= 64)
        s.words_[i] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return s;
}

std::size_t IndexSet::hash() const noexcept {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
    return h;
}

void Profile::validate() const {
    if (n < 1 || n > kMaxDim)
        throw InputError("profile " + to_string() + ": n must lie in [1, " + std::to_string(kMaxDim) + "]");
    if (k < 1 || l < 0)
        throw InputError("profile " + to_string() + ": need k >= 1 and l >= 0");
    if (n < k + l)
        throw InputError("profile " + to_string() + ": need n >= k + l");
}

void Profile::validate_for_g() const {
    validate();
    if (!(k > l && l >= 1))
        throw InputError("profile " + to_string() + ": g(n,k,l) needs k > l >= 1");
}

std::string Profile::to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
}

SignedVector::SignedVector(int dim, IndexSet pos, IndexSet neg) : dim_(dim), pos_(pos), neg_(neg) {
    if (dim < 0 || dim > kMaxDim) throw InputError("dimension " + std::to_string(dim) + " out of range");
    if (!(pos & neg).empty()) throw InputError("positive and negative supports overlap");
    const auto outside = (pos | neg) - IndexSet::range(dim);
    if (!outside.empty()) throw InputError("support index exceeds dimension " + std::to_string(dim));
}

SignedVector SignedVector::from_values(const std::vector<int>& values) {
    if (values.size() > static_cast<std::size_t>(kMaxDim)) throw InputError("too many coordinates");
    IndexSet pos, neg;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const int idx = static_cast<int>(i) + 1;
        switch (values[i]) {
        case 1: pos.insert(idx); break;
        case -1: neg.insert(idx); break;
        case 0: break;
        default: throw InputError("coordinate value " + std::to_string(values[i]) + " is not in {-1,0,1}");
        }
    }
    return {static_cast<int>(values.size()), pos, neg};
}

std::vector<int> SignedVector::values() const {
    std::vector<int> out(dim_);
    for (int i = 1; i <= dim_; ++i) out[i - 1] = (*this)[i];
    return out;
}

VectorFamily::VectorFamily(Profile profile) : profile_(profile) { profile_.validate(); }

VectorFamily::VectorFamily(Profile profile, std::vector<SignedVector> members)
    : profile_(profile), members_(std::move(members)) {
    profile_.validate();
    for (const auto& v : members_)
        if (!v.fits(profile_))
            throw InputError("vector " + format_vector(v) + " does not belong to profile " + profile_.to_string());
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VectorFamily::contains(const SignedVector& v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::optional<std::size_t> VectorFamily::index_of(const SignedVector& v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

namespace {

void enumerate_rec(const Profile& p, int pos, int plus_left, int minus_left, IndexSet& plus, IndexSet& minus,
                   std::vector<SignedVector>& out) {
    const int remaining = p.n - pos + 1;
    if (plus_left + minus_left > remaining) return;
    if (pos > p.n) {
        out.emplace_back(p.n, plus, minus);
        return;
    }
    if (plus_left > 0) {
        plus.insert(pos);
        enumerate_rec(p, pos + 1, plus_left - 1, minus_left, plus, minus, out);
        plus.erase(pos);
    }
    if (minus_left > 0) {
        minus.insert(pos);
        enumerate_rec(p, pos + 1, plus_left, minus_left - 1, plus, minus, out);
        minus.erase(pos);
    }
    enumerate_rec(p, pos + 1, plus_left, minus_left, plus, minus, out);
}

} // namespace

VectorFamily enumerate_all(const Profile& profile) {
    profile.validate();
    std::vector<SignedVector> out;
    IndexSet plus, minus;
    enumerate_rec(profile, 1, profile.k, profile.l, plus, minus, out);
    return VectorFamily(profile, std::move(out));
}

int scalar_product(const SignedVector& v, const SignedVector& w) {
    if (v.dim() != w.dim())
        throw InputError("scalar product of vectors with dimensions " + std::to_string(v.dim()) + " and " +
                         std::to_string(w.dim()));
    return (v.pos() & w.pos()).size() + (v.neg() & w.neg()).size() - (v.pos() & w.neg()).size() -
           (v.neg() & w.pos()).size();
}

SignedVector restrict_to(const SignedVector& v, int a, int b) {
    if (a < 1 || a > b || b > v.dim())
        throw InputError("window [" + std::to_string(a) + "," + std::to_string(b) + "] outside [1," +
                         std::to_string(v.dim()) + "]");
    IndexSet pos, neg;
    for (int i = a; i <= b; ++i) {
        if (v.pos().contains(i)) pos.insert(i - a + 1);
        if (v.neg().contains(i)) neg.insert(i - a + 1);
    }
    return {b - a + 1, pos, neg};
}

int lambda(const SignedVector& v) {
    if (v.dim() == 0) return 0;
    int suffix = 0;
    int best = v[v.dim()];
    for (int i = v.dim(); i >= 1; --i) {
        suffix += v[i];
        best = std::min(best, suffix);
    }
    return best;
}

std::optional<SuffixMarkers> suffix_markers(const SignedVector& v) {
    int suffix = 0;
    for (int i = v.dim(); i >= 1; --i) {
        suffix += v[i];
        if (suffix == -1) {
            int negatives = 0;
            for (int j = i; j <= v.dim(); ++j) negatives += v.neg().contains(j);
            return SuffixMarkers{i, negatives};
        }
    }
    return std::nullopt;
}

SignedVector parse_vector(std::string_view text) {
    static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    if (text.empty()) throw ParseError("empty vector string");
    std::vector<int> values;
    for (std::size_t i = 0; i < text.size();) {
        const char c = text[i];
        if (c == '+') {
            values.push_back(1);
            ++i;
        } else if (c == '-') {
            values.push_back(-1);
            ++i;
        } else if (c == '0') {
            values.push_back(0);
            ++i;
        } else if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
            values.push_back(-1);
            i += kUnicodeMinus.size();
        } else {
            throw ParseError("illegal character '" + std::string(1, c) + "' at offset " + std::to_string(i) +
                             " in \"" + std::string(text) + "\"");
        }
    }
    if (values.size() > static_cast<std::size_t>(kMaxDim))
        throw ParseError("vector longer than the dimension cap " + std::to_string(kMaxDim));
    return SignedVector::from_values(values);
}

std::string format_vector(const SignedVector& v) {
    std::string s(v.dim(), '0');
    for (int i = 1; i <= v.dim(); ++i) {
        if (v.pos().contains(i)) s[i - 1] = '+';
        else if (v.neg().contains(i)) s[i - 1] = '-';
    }
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

} // namespace

VectorFamily read_family(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("family file is empty");
    Profile p;
    {
        std::istringstream header{std::string(trim(line))};
        std::string extra;
        if (!(header >> p.n >> p.k >> p.l) || (header >> extra))
            throw ParseError("family header must be \"n k l\", got \"" + line + "\"");
    }
    try {
        p.validate();
    } catch (const InputError& e) {
        throw ParseError(std::string("family header: ") + e.what());
    }
    std::vector<SignedVector> members;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty()) continue;
        auto v = parse_vector(body);
        if (!v.fits(p))
            throw ParseError("line " + std::to_string(line_no) + ": \"" + std::string(body) +
                             "\" does not belong to profile " + p.to_string());
        members.push_back(v);
    }
    return VectorFamily(p, std::move(members));
}

void write_family(std::ostream& out, const VectorFamily& family) {
    const auto& p = family.profile();
    out << p.n << ' ' << p.k << ' ' << p.l << '\n';
    for (const auto& v : family) out << format_vector(v) << '\n';
}

VectorFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open family file " + path);
    return read_family(in);
}

void write_family_file(const std::string& path, const VectorFamily& family) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write family file " + path);
    write_family(out, family);
    if (!out) throw InputError("error while writing " + path);
}

} // namespace signvec
