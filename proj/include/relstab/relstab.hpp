#pragma once

#include "relstab/bigint.hpp"
#include "relstab/ring.hpp"
#include "relstab/matrix.hpp"
#include "relstab/smith.hpp"
#include "relstab/linear.hpp"
#include "relstab/group.hpp"
#include "relstab/algebra.hpp"
#include "relstab/module.hpp"
#include "relstab/hom.hpp"
#include "relstab/constructions.hpp"
#include "relstab/homological.hpp"
#include "relstab/resolution.hpp"
#include "relstab/decomposition.hpp"
#include "relstab/corpus.hpp"
#include "relstab/io.hpp"
#include "relstab/suite.hpp"
#include "relstab/worked_example.hpp"
