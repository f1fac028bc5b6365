#pragma once

#include "mec/alias.hpp"
#include "mec/bernoulli_split.hpp"
#include "mec/coupling.hpp"
#include "mec/error.hpp"
#include "mec/geom_split.hpp"
#include "mec/majorization.hpp"
#include "mec/pmf.hpp"
#include "mec/sampler.hpp"
