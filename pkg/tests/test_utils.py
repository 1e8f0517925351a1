# -*- coding: utf-8  -*-

import lxml.etree
import pytest

from twofactor.utils import ceil_div, str_from_xml_elt


class TestToUnicode(object):
    def test_empty_element(self):
        elt = lxml.etree.Element('sweep')
        assert str_from_xml_elt(elt) == '<sweep/>'

    def test_attributes_and_text(self):
        elt = lxml.etree.Element('clause', name='order')
        elt.text = 'n=7 >= 8'
        assert str_from_xml_elt(elt) == '<clause name="order">n=7 &gt;= 8</clause>'

    def test_pretty(self):
        elt = lxml.etree.Element('counts')
        lxml.etree.SubElement(elt, 'graphs').text = '21'
        lxml.etree.SubElement(elt, 'skipped').text = '0'
        assert (str_from_xml_elt(elt, pretty_print=True) ==
                '<counts>\n  <graphs>21</graphs>\n  <skipped>0</skipped>\n</counts>\n')


class TestCeilDiv(object):
    @pytest.mark.parametrize(
        'a, b, expected',
        [(6, 2, 3), (7, 2, 4), (1, 3, 1), (0, 5, 0), (9, 4, 3)],
        ids=['exact', 'round-up', 'small', 'zero', 'larger'])
    #
    def test_values(self, a, b, expected):
        assert ceil_div(a, b) == expected
