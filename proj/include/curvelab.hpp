#pragma once

#include "curvelab/bipoly.hpp"
#include "curvelab/bipoly_gcd.hpp"
#include "curvelab/branches.hpp"
#include "curvelab/contact.hpp"
#include "curvelab/corpus.hpp"
#include "curvelab/error.hpp"
#include "curvelab/implicit.hpp"
#include "curvelab/intersection.hpp"
#include "curvelab/parametric.hpp"
#include "curvelab/parse.hpp"
#include "curvelab/rational.hpp"
#include "curvelab/real_degree.hpp"
#include "curvelab/relations.hpp"
#include "curvelab/series.hpp"
#include "curvelab/upoly.hpp"
