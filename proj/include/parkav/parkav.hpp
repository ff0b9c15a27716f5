#pragma once

// Umbrella header.

#include "parkav/asymptotics.hpp"
#include "parkav/bigint.hpp"
#include "parkav/closed_forms.hpp"
#include "parkav/compositions.hpp"
#include "parkav/dyck.hpp"
#include "parkav/parking.hpp"
#include "parkav/sylvester.hpp"
#include "parkav/tableaux.hpp"
#include "parkav/words.hpp"
