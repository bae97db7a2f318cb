#pragma once

#include "lexlab/cohomology.hpp"
#include "lexlab/error.hpp"
#include "lexlab/groebner.hpp"
#include "lexlab/hilbert.hpp"
#include "lexlab/ideal.hpp"
#include "lexlab/lab.hpp"
#include "lexlab/lex.hpp"
#include "lexlab/linalg.hpp"
#include "lexlab/parse.hpp"
#include "lexlab/ring.hpp"
#include "lexlab/serialize.hpp"
