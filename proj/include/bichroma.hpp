#pragma once

#include "bichroma/approx.hpp"
#include "bichroma/crossing.hpp"
#include "bichroma/error.hpp"
#include "bichroma/experiment.hpp"
#include "bichroma/generators.hpp"
#include "bichroma/geometry.hpp"
#include "bichroma/io.hpp"
#include "bichroma/minbst.hpp"
#include "bichroma/oracle.hpp"
#include "bichroma/plane.hpp"
#include "bichroma/quadtree.hpp"
#include "bichroma/svg.hpp"
#include "bichroma/tree.hpp"
