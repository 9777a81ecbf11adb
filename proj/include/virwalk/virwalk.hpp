#pragma once

#include "bivirasoro.hpp"
#include "diffops.hpp"
#include "exact.hpp"
#include "expansion.hpp"
#include "partition.hpp"
#include "schur_oracle.hpp"
#include "tableaux.hpp"
#include "tpolynomial.hpp"
#include "verify.hpp"
#include "virasoro.hpp"
#include "walks.hpp"
#include "zseries.hpp"
