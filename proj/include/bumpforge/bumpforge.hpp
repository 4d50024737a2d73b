#ifndef BUMPFORGE_BUMPFORGE_HPP
#define BUMPFORGE_BUMPFORGE_HPP

#include "bumpforge/analysis.hpp"
#include "bumpforge/double_double.hpp"
#include "bumpforge/errors.hpp"
#include "bumpforge/io.hpp"
#include "bumpforge/linear_solve.hpp"
#include "bumpforge/moments.hpp"
#include "bumpforge/polyapprox.hpp"
#include "bumpforge/profile.hpp"
#include "bumpforge/verify.hpp"

#endif
