#include "temo/population.hpp"

namespace temo {

Population merge(const Population& a, const Population& b)
{
    if (a.x.cols() != b.x.cols() || a.f.cols() != b.f.cols()) throw ShapeError("merge: populations differ in shape");
    Population out;
    out.x.resize(a.x.rows() + b.x.rows(), a.x.cols());
    out.f.resize(a.f.rows() + b.f.rows(), a.f.cols());
    out.x << a.x, b.x;
    out.f << a.f, b.f;
    return out;
}

} // namespace temo
