#include "lorentzkit/function.hpp"

#include <algorithm>
#include <string>

namespace lorentzkit {

EndpointHints hints_of(const RadialProfile& p) {
  const auto segs = p.segments();
  EndpointHints h;
  h.head = head_asymptote(segs.front());
  h.support_end = p.support_end();
  if (h.support_end == kInf) h.tail = tail_asymptote(segs.back());
  return h;
}

template <class Domain>
PiecewiseFunction<Domain>::PiecewiseFunction(RadialProfile exact)
    : exact_(std::move(exact)),
      breakpoints_(exact_->breakpoints()),
      hints_(hints_of(*exact_)),
      non_increasing_(is_decreasing(*exact_)) {
  const double end = exact_->domain_end();
  if (end != kInf) breakpoints_.push_back(end);
  std::erase_if(breakpoints_, [&](double b) { return b >= hints_.support_end; });
  eval_ = [p = *exact_, end](double x) { return x >= end ? 0.0 : p.eval(x); };
}

template <class Domain>
PiecewiseFunction<Domain>::PiecewiseFunction(Eval f, std::vector<double> breakpoints,
                                             EndpointHints hints, bool non_increasing)
    : eval_(std::move(f)),
      breakpoints_(std::move(breakpoints)),
      hints_(hints),
      non_increasing_(non_increasing) {
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
  std::erase_if(breakpoints_,
                [&](double b) { return !(b > 0.0) || b >= hints_.support_end || b == kInf; });
}

template <class Domain>
double PiecewiseFunction<Domain>::operator()(double x) const {
  if (!(x > 0.0)) throw DomainError("evaluation point must be positive, got " + std::to_string(x));
  if (x >= hints_.support_end) return 0.0;
  return eval_(x);
}

template class PiecewiseFunction<RadialDomain>;
template class PiecewiseFunction<MeasureDomain>;

}  // namespace lorentzkit
