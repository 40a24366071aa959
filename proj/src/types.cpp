#include "qlines/types.hpp"

#include <cmath>

namespace qlines {

void Curve::validate() const {
    if (points.size() != params.size())
        throw std::invalid_argument("Curve: points/params length mismatch");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].real()) || !std::isfinite(points[i].imag()) ||
            !std::isfinite(params[i]))
            throw std::invalid_argument("Curve: non-finite entry at index " + std::to_string(i));
        if (i > 0) {
            if (!(params[i] > params[i - 1]))
                throw std::invalid_argument("Curve: params not strictly increasing at index " +
                                            std::to_string(i));
            if (points[i] == points[i - 1])
                throw std::invalid_argument("Curve: repeated consecutive point at index " +
                                            std::to_string(i));
        }
    }
}

}  // namespace qlines
