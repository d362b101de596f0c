#pragma once

#include "repstab/rational.hpp"
#include "repstab/errors.hpp"
#include "repstab/partition.hpp"
#include "repstab/symchar.hpp"
#include "repstab/induct.hpp"
#include "repstab/charpoly.hpp"
#include "repstab/fistab.hpp"
#include "repstab/gamma.hpp"
