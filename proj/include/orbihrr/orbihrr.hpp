#pragma once

#include "orbihrr/cyclotomic.hpp"
#include "orbihrr/errors.hpp"
#include "orbihrr/groups.hpp"
#include "orbihrr/inertia.hpp"
#include "orbihrr/linalg.hpp"
#include "orbihrr/mukai.hpp"
#include "orbihrr/rational.hpp"
#include "orbihrr/rings.hpp"
#include "orbihrr/series.hpp"
#include "orbihrr/stack_bg.hpp"
#include "orbihrr/stack_wps.hpp"
#include "orbihrr/text.hpp"
