#include "palinform/scalar.hpp"

namespace palinform {

std::string format_scalar(const ExactComplex& z) {
    if (z.im.is_zero()) return z.re.str();
    std::string im = z.im.str() + "*i";
    if (z.re.is_zero()) return im;
    if (im[0] == '-') return z.re.str() + im;
    return z.re.str() + "+" + im;
}

}  // namespace palinform
