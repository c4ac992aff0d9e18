#ifndef NCCOOP_NCCOOP_HPP
#define NCCOOP_NCCOOP_HPP

#include "nccoop/errors.hpp"
#include "nccoop/rational.hpp"
#include "nccoop/lin.hpp"
#include "nccoop/words.hpp"
#include "nccoop/surjections.hpp"
#include "nccoop/cooperad.hpp"
#include "nccoop/probability.hpp"
#include "nccoop/cumulants.hpp"
#include "nccoop/io.hpp"

#endif  // NCCOOP_NCCOOP_HPP
