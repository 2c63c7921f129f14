#pragma once

#include "bits.hpp"
#include "complex.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "poset.hpp"
#include "skeleton_reconstruction.hpp"
#include "sphere_reconstruction.hpp"
