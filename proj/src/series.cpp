#include "msc/series.hpp"

#include "msc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace msc {

namespace {

int clamp_order(long long o) {
    return static_cast<int>(
        std::min<long long>(o, TruncatedSeries::kExactOrder));
}

} // namespace

TruncatedSeries TruncatedSeries::zero(int order) {
    TruncatedSeries s;
    s.order_ = order;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int p, int q, const Int& c,
                                          int order) {
    TruncatedSeries s;
    s.order_ = order;
    if (c != 0 && p + q <= order) {
        s.coeffs_[{p, q}] = c;
        s.min_total_ = p + q;
    } else {
        s.min_total_ = std::min(0, p + q);
    }
    return s;
}

TruncatedSeries TruncatedSeries::from_coeffs(
    std::map<std::pair<int, int>, Int> coeffs, int order) {
    TruncatedSeries s;
    s.order_ = order;
    for (auto& [pq, c] : coeffs)
        if (c != 0 && pq.first + pq.second <= order)
            s.coeffs_.emplace(pq, std::move(c));
    s.min_total_ = 0;
    for (const auto& [pq, c] : s.coeffs_)
        s.min_total_ = std::min(s.min_total_, pq.first + pq.second);
    return s;
}

TruncatedSeries TruncatedSeries::cyclo_inverse(unsigned i, int order) {
    TruncatedSeries s;
    s.order_ = std::max(order, 0);
    s.min_total_ = 0;
    for (int k = 0; 2 * k * static_cast<int>(i) <= s.order_; ++k)
        s.coeffs_[{k * static_cast<int>(i), k * static_cast<int>(i)}] = -1;
    return s;
}

Int TruncatedSeries::coeff(int p, int q) const {
    auto it = coeffs_.find({p, q});
    return it == coeffs_.end() ? Int(0) : it->second;
}

void TruncatedSeries::truncate(int n) {
    order_ = std::min(order_, n);
    std::erase_if(coeffs_, [this](const auto& t) {
        return t.first.first + t.first.second > order_;
    });
}

void TruncatedSeries::add_coeff(int p, int q, const Int& c) {
    if (c == 0)
        return;
    auto it = coeffs_.find({p, q});
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::make_pair(p, q), c);
    } else {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

TruncatedSeries s_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out;
    out.order_ = std::min(a.order_, b.order_);
    out.min_total_ = std::min(a.min_total_, b.min_total_);
    for (const auto& [pq, c] : a.coeffs_)
        if (pq.first + pq.second <= out.order_)
            out.add_coeff(pq.first, pq.second, c);
    for (const auto& [pq, c] : b.coeffs_)
        if (pq.first + pq.second <= out.order_)
            out.add_coeff(pq.first, pq.second, c);
    return out;
}

TruncatedSeries s_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out;
    // A product coefficient at total degree d needs a up to d - min_total(b)
    // and b up to d - min_total(a); both are known exactly iff d stays below
    // the bound computed here.
    out.order_ = clamp_order(
        std::min(static_cast<long long>(a.order_) + b.min_total_,
                 static_cast<long long>(b.order_) + a.min_total_));
    out.min_total_ = a.min_total_ + b.min_total_;
    for (const auto& [pa, ca] : a.coeffs_)
        for (const auto& [pb, cb] : b.coeffs_) {
            int p = pa.first + pb.first, q = pa.second + pb.second;
            if (p + q <= out.order_)
                out.add_coeff(p, q, ca * cb);
        }
    return out;
}

TruncatedSeries s_expand(const RingElement& elem, int n,
                         const std::map<std::string, TruncatedSeries>& genv) {
    // n counts powers of uv (the image of L); each contributes total degree
    // two, so internally the series is exact through total degree 2n.
    const int target = 2 * n;
    TruncatedSeries acc = TruncatedSeries::zero();
    for (const auto& [m, c] : elem.numer().terms()) {
        TruncatedSeries t = TruncatedSeries::monomial(m.lef, m.lef, c);
        for (const auto& [name, e] : m.gens) {
            auto it = genv.find(name);
            if (it == genv.end())
                throw UnboundGeneratorError("no series for generator '" + name +
                                            "'");
            for (unsigned k = 0; k < e; ++k)
                t = s_mul(t, it->second);
        }
        acc = s_add(acc, t);
    }

    const Denominator& d = elem.denom();
    if (d.lef_pow > 0) {
        int a = static_cast<int>(d.lef_pow);
        acc = s_mul(acc, TruncatedSeries::monomial(-a, -a, 1));
    }
    for (const auto& [i, e] : d.cyclo) {
        for (unsigned k = 0; k < e; ++k) {
            // Long enough that this factor never limits exactness below
            // the target.
            int needed = std::max(0, target - acc.min_total());
            acc = s_mul(acc, TruncatedSeries::cyclo_inverse(i, needed));
        }
    }

    if (acc.order() < target)
        throw InsufficientOrderError(
            "generator series only support expansion to total degree " +
            std::to_string(acc.order()) + ", requested order " +
            std::to_string(n));
    acc.truncate(target);
    return acc;
}

std::string TruncatedSeries::str() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    std::vector<std::pair<std::pair<int, int>, Int>> order;
    order.assign(coeffs_.begin(), coeffs_.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second,
            tb = b.first.first + b.first.second;
        if (ta != tb)
            return ta < tb;
        return a.first < b.first;
    });
    for (const auto& [pq, c] : order) {
        Int abs = c < 0 ? Int(-c) : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        std::string mono;
        auto var = [](const char* name, int e) -> std::string {
            if (e == 0)
                return "";
            if (e == 1)
                return name;
            return std::string(name) + "^" + std::to_string(e);
        };
        mono = var("u", pq.first);
        std::string vm = var("v", pq.second);
        if (!mono.empty() && !vm.empty())
            mono += "*";
        mono += vm;
        if (mono.empty())
            os << abs.str();
        else if (abs == 1)
            os << mono;
        else
            os << abs.str() << "*" << mono;
    }
    return os.str();
}

} // namespace msc
