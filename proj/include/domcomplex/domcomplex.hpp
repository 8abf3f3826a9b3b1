#ifndef DOMCOMPLEX_DOMCOMPLEX_HPP
#define DOMCOMPLEX_DOMCOMPLEX_HPP

#include "cache_io.hpp"
#include "complex.hpp"
#include "construction.hpp"
#include "d52.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "morse.hpp"

#endif // DOMCOMPLEX_DOMCOMPLEX_HPP
