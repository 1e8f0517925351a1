# -*- coding: utf-8 -*-

import sys

from twofactor.cli import main

sys.exit(main())
