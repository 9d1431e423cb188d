#ifndef PCLIE_PCLIE_HPP
#define PCLIE_PCLIE_HPP

#include "pclie/analysis.hpp"
#include "pclie/error.hpp"
#include "pclie/free_lie.hpp"
#include "pclie/graph.hpp"
#include "pclie/linalg.hpp"
#include "pclie/metabelian.hpp"
#include "pclie/nilpotent.hpp"
#include "pclie/oracle.hpp"
#include "pclie/scalar.hpp"
#include "pclie/structure.hpp"
#include "pclie/term.hpp"

#endif  // PCLIE_PCLIE_HPP
