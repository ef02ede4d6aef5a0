#ifndef RIORDAN_PARAMS_HPP
#define RIORDAN_PARAMS_HPP

namespace riordan {

// Parameters (r, s, t) of the three-parameter involution family.
template <typename Scalar>
struct FamilyParams {
    Scalar r;
    Scalar s;
    Scalar t;
};

} // namespace riordan

#endif // RIORDAN_PARAMS_HPP
