#ifndef GLUING_GLUING_HPP_
#define GLUING_GLUING_HPP_

#include "gluing/canonical.hpp"
#include "gluing/closure.hpp"
#include "gluing/embedding.hpp"
#include "gluing/enumerate.hpp"
#include "gluing/error.hpp"
#include "gluing/glue.hpp"
#include "gluing/guards.hpp"
#include "gluing/multigraph.hpp"
#include "gluing/properties.hpp"
#include "gluing/registry.hpp"
#include "gluing/script.hpp"

#endif  // GLUING_GLUING_HPP_
