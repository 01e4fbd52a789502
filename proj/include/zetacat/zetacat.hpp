#pragma once

#include "zetacat/coverings.hpp"
#include "zetacat/error.hpp"
#include "zetacat/exact.hpp"
#include "zetacat/graph.hpp"
#include "zetacat/gset.hpp"
#include "zetacat/homs.hpp"
#include "zetacat/isomorphism.hpp"
#include "zetacat/json_io.hpp"
#include "zetacat/lab.hpp"
#include "zetacat/limits.hpp"
#include "zetacat/standard_graphs.hpp"
#include "zetacat/zeta.hpp"
