#pragma once

#include "dyck4d/enumeration.hpp"
#include "dyck4d/error.hpp"
#include "dyck4d/geometry.hpp"
#include "dyck4d/lattice.hpp"
#include "dyck4d/projection.hpp"
#include "dyck4d/render.hpp"
#include "dyck4d/serialize.hpp"
#include "dyck4d/vec4.hpp"
#include "dyck4d/word.hpp"
