#ifndef EQDOM_EQDOM_HPP
#define EQDOM_EQDOM_HPP

#include "eqdom/decide.hpp"
#include "eqdom/fixtures.hpp"
#include "eqdom/group.hpp"
#include "eqdom/io.hpp"
#include "eqdom/rees.hpp"
#include "eqdom/semigroup.hpp"
#include "eqdom/terms.hpp"
#include "eqdom/translations.hpp"
#include "eqdom/util.hpp"
#include "eqdom/witness.hpp"

#endif  // EQDOM_EQDOM_HPP
