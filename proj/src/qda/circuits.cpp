#include "qda/circuits.hpp"

#include <stdexcept>

namespace qda {

Circuit toffoli4() {
    Circuit c(4);
    // parity walk: s1, s2, s3 on their own wires, then the CNOT network
    // presents 12, 23, 123, 13 on a control wire for the remaining V gates
    c << Gate::cv(1, 0, 4)    // +V on s1
      << Gate::cv(2, 0, 4)    // +V on s2
      << Gate::cv(3, 0, 4)    // +V on s3
      << Gate::cnot(1, 2)     // q2 <- s1^s2
      << Gate::cvdg(2, 0, 4)  // -V on s1^s2
      << Gate::cnot(1, 2)     // q2 restored
      << Gate::cnot(2, 3)     // q3 <- s2^s3
      << Gate::cvdg(3, 0, 4)  // -V on s2^s3
      << Gate::cnot(1, 3)     // q3 <- s1^s2^s3
      << Gate::cv(3, 0, 4)    // +V on s1^s2^s3
      << Gate::cnot(2, 3)     // q3 <- s1^s3
      << Gate::cvdg(3, 0, 4)  // -V on s1^s3
      << Gate::cnot(1, 3);    // q3 restored
    return c;
}

namespace {

void append_c3z(Circuit& c) {
    c << Gate::h(0);
    for (const Gate& g : toffoli4().gates) c.append(g);
    c << Gate::h(0);
}

}  // namespace

Circuit grover4(int marked) {
    if (marked < 0 || marked > 15) throw std::invalid_argument("marked index must be in [0, 15]");
    Circuit c(4);
    for (int q = 0; q < 4; ++q) c << Gate::h(q);
    // oracle: phase-flip |marked>
    for (int q = 0; q < 4; ++q)
        if (((marked >> q) & 1) == 0) c << Gate::x(q);
    append_c3z(c);
    for (int q = 0; q < 4; ++q)
        if (((marked >> q) & 1) == 0) c << Gate::x(q);
    // diffusion
    for (int q = 0; q < 4; ++q) c << Gate::h(q);
    for (int q = 0; q < 4; ++q) c << Gate::x(q);
    append_c3z(c);
    for (int q = 0; q < 4; ++q) c << Gate::x(q);
    for (int q = 0; q < 4; ++q) c << Gate::h(q);
    for (int q = 0; q < 4; ++q) c << Gate::measure(q);
    return c;
}

}  // namespace qda
